#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lieflag/nodeset.hpp"

namespace lieflag {

enum class MagicRow { Base, QuadraticExt, Quaternion, Octonion };
enum class MagicCol { A1, TwoA2, C3, F4 };

/// "base", "quadratic_ext", "quaternion", "octonion".
MagicRow parse_magic_row(std::string_view label);
/// "A1", "2A2", "C3", "F4".
MagicCol parse_magic_col(std::string_view label);

struct MagicCell {
  MagicRow row;
  MagicCol col;
  std::string row_label;
  std::string col_label;
  std::string group_type;
  int invariant_degree = 0;
};

struct JCondition {
  std::vector<int> degrees;
  std::vector<int> values;
};

struct GroupConditionRow {
  std::string group;
  int degree = 0;
  std::optional<JCondition> j_condition;
  std::string condition;
  std::string equivalent_condition;
  /// Circled nodes of P_Theta; empty optional means "any".
  std::optional<NodeSet> parabolic;

  std::string parabolic_text() const;  // "any" or "P_{1,6}"
};

enum class RostCondition {
  Zero,
  PureSymbolDivisibleByK,
  SymbolNotDivisibleByK,
  NotPureSymbol,
  ImpossibleWithSplitTits,
};

/// Kebab-case names as in the data file, e.g. "not-pure-symbol".
RostCondition parse_rost_condition(std::string_view name);
std::string to_string(RostCondition c);

struct TitsIndexCase {
  RostCondition rost_condition;
  std::string text;
  std::string index;  // "quasi-split" or "isotropic"
  NodeSet circled;
  std::string kernel_type;
  bool possible = true;
};

enum class PredicateRelation { Equals, Divides, DivisibleBy };

struct TitsConstructionRow {
  std::string group;
  std::string construction;
  std::string inputs;
  std::string subject;
  PredicateRelation relation;
  int invariant_degree = 0;
  std::string source_text;
};

/// The classification tables: magic square with invariant degrees, the
/// per-group conditions, Tits-construction conditions and the 2E6 Tits
/// indices. Read-only after loading.
class Tables {
 public:
  static Tables from_json(const nlohmann::json& doc);
  static const Tables& builtin();

  const std::string& version() const { return version_; }
  const std::vector<MagicCell>& magic_cells() const { return cells_; }
  const std::vector<GroupConditionRow>& conditions() const { return conditions_; }
  const std::vector<TitsIndexCase>& tits_indices() const { return tits_; }
  const std::vector<TitsConstructionRow>& tits_constructions() const { return constructions_; }
  const std::string& tits_index_note() const { return tits_note_; }

  const MagicCell& query_magic_square(MagicRow row, MagicCol col) const;
  const GroupConditionRow& conditions_for(std::string_view group) const;
  const TitsIndexCase& tits_index_for_rost(RostCondition c) const;

 private:
  std::string version_;
  std::vector<MagicCell> cells_;
  std::vector<GroupConditionRow> conditions_;
  std::vector<TitsIndexCase> tits_;
  std::vector<TitsConstructionRow> constructions_;
  std::string tits_note_;
};

}  // namespace lieflag
