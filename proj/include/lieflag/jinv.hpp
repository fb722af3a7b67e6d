#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "lieflag/polyring.hpp"

namespace lieflag {

/// J-invariant of a group at p = 2, with its degree and cap lists.
struct JProfile {
  std::string group_label;
  int prime = 2;
  std::vector<int> degrees;
  std::vector<int> caps;
  std::vector<int> values;

  int size() const { return static_cast<int>(degrees.size()); }
  friend bool operator==(const JProfile&, const JProfile&) = default;
};

/// One row of the J-invariant parameter table.
struct JGroup {
  std::string label;
  std::string display;
  std::vector<std::string> aliases;
  std::vector<int> degrees;
  std::vector<int> caps;
  /// Each chain [a, b, c, ...] demands j_a >= j_b >= j_c >= ... (0-based).
  std::vector<std::vector<int>> chains;
  bool constraints_from_source = false;
};

class JTable {
 public:
  static JTable from_json(const nlohmann::json& doc);
  /// The table compiled into the library.
  static const JTable& builtin();

  const std::string& version() const { return version_; }
  const std::vector<JGroup>& groups() const { return groups_; }
  /// Resolves a label or alias. Omitted groups and unknown labels throw.
  const JGroup& group(std::string_view label) const;

 private:
  std::string version_;
  std::vector<JGroup> groups_;
  std::vector<std::string> omitted_;
};

/// j = k for the group.
JProfile max_profile(std::string_view group_label, const JTable& table = JTable::builtin());

/// Profile for explicit values; throws InvalidArgument if not admissible.
JProfile make_profile(std::string_view group_label, std::vector<int> values,
                      const JTable& table = JTable::builtin());

/// Checks lengths, 0 <= j_i <= k_i and the group's chain constraints.
bool is_admissible(const JProfile& profile, const JTable& table = JTable::builtin());

/// prod_i (t^(d_i 2^j_i) - 1) / (t^d_i - 1).
IntPoly upper_motive_poly(const JProfile& profile, const JTable& table = JTable::builtin());

struct AdmissibleSet {
  std::vector<JProfile> profiles;  // lexicographic order
  /// True when only 0 <= j_i <= k_i was applied (no further constraints known).
  bool unconstrained_by_source = false;
};

AdmissibleSet enumerate_admissible(std::string_view group_label,
                                   const JTable& table = JTable::builtin());

}  // namespace lieflag
