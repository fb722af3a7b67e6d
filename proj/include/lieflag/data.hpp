#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace lieflag {

namespace detail {
/// Raw text of a data document compiled into the library
/// ("tables", "jinvariant" or "fixtures").
std::string_view builtin_document(std::string_view name);
}  // namespace detail

/// Loads data document `name`: `<dir>/<name>.json` when a directory is
/// given and the file exists, the built-in copy otherwise.
nlohmann::json load_document(std::string_view name,
                             const std::optional<std::filesystem::path>& dir = std::nullopt);

}  // namespace lieflag
