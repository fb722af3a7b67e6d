#include "lieflag/magictables.hpp"

#include <algorithm>
#include <array>

#include "lieflag/data.hpp"
#include "lieflag/error.hpp"

namespace lieflag {

namespace {

constexpr std::array<std::string_view, 4> kRowLabels{"base", "quadratic_ext", "quaternion", "octonion"};
constexpr std::array<std::string_view, 4> kColLabels{"A1", "2A2", "C3", "F4"};
constexpr std::array<std::string_view, 5> kRostNames{
    "zero", "pure-symbol-divisible-by-k", "symbol-not-divisible-by-k", "not-pure-symbol",
    "impossible-with-split-tits"};

template <std::size_t N>
int index_of(const std::array<std::string_view, N>& labels, std::string_view label,
             std::string_view what) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    std::string known;
    for (auto l : labels) known += (known.empty() ? "" : ", ") + std::string(l);
    throw InvalidArgument("unknown " + std::string(what) + " '" + std::string(label) +
                          "'; expected one of " + known);
  }
  return static_cast<int>(it - labels.begin());
}

PredicateRelation parse_relation(const std::string& s) {
  if (s == "equals") return PredicateRelation::Equals;
  if (s == "divides") return PredicateRelation::Divides;
  if (s == "divisible_by") return PredicateRelation::DivisibleBy;
  throw InvalidArgument("unknown predicate relation '" + s + "'");
}

}  // namespace

MagicRow parse_magic_row(std::string_view label) {
  return static_cast<MagicRow>(index_of(kRowLabels, label, "magic square row"));
}

MagicCol parse_magic_col(std::string_view label) {
  return static_cast<MagicCol>(index_of(kColLabels, label, "magic square column"));
}

RostCondition parse_rost_condition(std::string_view name) {
  return static_cast<RostCondition>(index_of(kRostNames, name, "Rost condition"));
}

std::string to_string(RostCondition c) { return std::string(kRostNames[static_cast<int>(c)]); }

std::string GroupConditionRow::parabolic_text() const {
  return parabolic ? "P_{" + parabolic->to_string() + "}" : "any";
}

Tables Tables::from_json(const nlohmann::json& doc) {
  Tables t;
  try {
    t.version_ = doc.at("version").get<std::string>();

    const auto& ms = doc.at("magic_square");
    const auto groups = ms.at("groups").get<std::vector<std::vector<std::string>>>();
    const auto degrees = ms.at("degrees").get<std::vector<std::vector<int>>>();
    if (groups.size() != 4 || degrees.size() != 4) throw InvalidArgument("magic square must be 4x4");
    for (int r = 0; r < 4; ++r) {
      if (groups[r].size() != 4 || degrees[r].size() != 4)
        throw InvalidArgument("magic square must be 4x4");
      for (int c = 0; c < 4; ++c)
        t.cells_.push_back({static_cast<MagicRow>(r), static_cast<MagicCol>(c),
                            std::string(kRowLabels[r]), std::string(kColLabels[c]), groups[r][c],
                            degrees[r][c]});
    }

    for (const auto& row : doc.at("conditions").at("rows")) {
      GroupConditionRow g;
      g.group = row.at("group").get<std::string>();
      g.degree = row.at("degree").get<int>();
      if (!row.at("j_condition").is_null())
        g.j_condition = JCondition{row["j_condition"].at("degrees").get<std::vector<int>>(),
                                   row["j_condition"].at("values").get<std::vector<int>>()};
      g.condition = row.at("condition").get<std::string>();
      g.equivalent_condition = row.at("equivalent_condition").get<std::string>();
      if (row.at("parabolic").is_array()) g.parabolic = NodeSet(row["parabolic"].get<std::vector<int>>());
      t.conditions_.push_back(std::move(g));
    }

    const auto& ti = doc.at("tits_indices");
    t.tits_note_ = ti.value("verification_note", "");
    for (const auto& row : ti.at("rows"))
      t.tits_.push_back({parse_rost_condition(row.at("rost_condition").get<std::string>()),
                         row.at("text").get<std::string>(), row.at("index").get<std::string>(),
                         NodeSet(row.at("circled").get<std::vector<int>>()),
                         row.at("kernel_type").get<std::string>(), row.at("possible").get<bool>()});

    for (const auto& row : doc.at("tits_constructions").at("rows")) {
      const auto& p = row.at("predicate");
      t.constructions_.push_back({row.at("group").get<std::string>(),
                                  row.at("construction").get<std::string>(),
                                  row.at("inputs").get<std::string>(),
                                  p.at("subject").get<std::string>(),
                                  parse_relation(p.at("relation").get<std::string>()),
                                  p.at("invariant_degree").get<int>(),
                                  row.at("source_text").get<std::string>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed tables document: ") + e.what());
  }
  if (t.tits_.size() != kRostNames.size())
    throw InvalidArgument("tables document must list exactly 5 Tits-index cases");
  for (std::size_t k = 0; k < kRostNames.size(); ++k)
    if (std::none_of(t.tits_.begin(), t.tits_.end(), [&](const TitsIndexCase& c) {
          return static_cast<std::size_t>(c.rost_condition) == k;
        }))
      throw InvalidArgument("tables document is missing Tits-index case " + std::string(kRostNames[k]));
  return t;
}

const Tables& Tables::builtin() {
  static const Tables tables = from_json(load_document("tables"));
  return tables;
}

const MagicCell& Tables::query_magic_square(MagicRow row, MagicCol col) const {
  for (const auto& c : cells_)
    if (c.row == row && c.col == col) return c;
  throw InvalidArgument("magic square cell not found");
}

const GroupConditionRow& Tables::conditions_for(std::string_view group) const {
  for (const auto& r : conditions_)
    if (r.group == group) return r;
  std::string known;
  for (const auto& r : conditions_) known += (known.empty() ? "" : ", ") + r.group;
  throw InvalidArgument("no condition row for group '" + std::string(group) + "'; known: " + known);
}

const TitsIndexCase& Tables::tits_index_for_rost(RostCondition c) const {
  for (const auto& r : tits_)
    if (r.rost_condition == c) return r;
  throw InvalidArgument("Tits-index case not found");
}

}  // namespace lieflag
