#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace lieflag {

struct VerifyCheck {
  std::string name;
  /// Where the expected value comes from (source identity or property).
  std::string reference;
  std::string expected;
  std::string actual;
  bool pass = false;
  double runtime_ms = 0.0;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;  // sorted by name

  bool all_pass() const;
  std::size_t failures() const;
};

/// Names of every check in the suite, sorted.
std::vector<std::string> verify_check_names();

/// Runs the checks whose names match the shell-style glob `filter` (all
/// checks when absent). A filter matching nothing throws InvalidArgument
/// listing the available names. `fixtures_dir` overrides the data files.
VerifyReport run_verify(const std::optional<std::string>& filter = std::nullopt,
                        const std::optional<std::filesystem::path>& fixtures_dir = std::nullopt);

/// Timings vary between runs; pass timings = false for byte-stable output.
nlohmann::json report_to_json(const VerifyReport& r, bool timings = true);
/// One line per check, prefixed with ✓ or ✗.
std::string report_to_text(const VerifyReport& r);
std::string report_to_csv(const VerifyReport& r);

}  // namespace lieflag
