#include "lieflag/data.hpp"

#include <fstream>
#include <sstream>

#include "lieflag/error.hpp"

namespace lieflag {

namespace detail {
extern const std::string_view embedded_tables_json;
extern const std::string_view embedded_jinvariant_json;
extern const std::string_view embedded_fixtures_json;

std::string_view builtin_document(std::string_view name) {
  if (name == "tables") return embedded_tables_json;
  if (name == "jinvariant") return embedded_jinvariant_json;
  if (name == "fixtures") return embedded_fixtures_json;
  throw InvalidArgument("no built-in data document '" + std::string(name) + "'");
}
}  // namespace detail

nlohmann::json load_document(std::string_view name,
                             const std::optional<std::filesystem::path>& dir) {
  if (dir) {
    auto path = *dir / (std::string(name) + ".json");
    if (std::filesystem::exists(path)) {
      std::ifstream in(path);
      if (!in) throw InvalidArgument("cannot read " + path.string());
      try {
        return nlohmann::json::parse(in);
      } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgument(path.string() + ": " + e.what());
      }
    }
  }
  return nlohmann::json::parse(detail::builtin_document(name));
}

}  // namespace lieflag
