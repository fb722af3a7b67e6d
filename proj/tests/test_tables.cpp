#include "doctest.h"
#include "lieflag/error.hpp"
#include "lieflag/data.hpp"
#include "lieflag/jinv.hpp"
#include "lieflag/magictables.hpp"

using namespace lieflag;

TEST_CASE("magic square") {
  const auto& t = Tables::builtin();
  CHECK(t.magic_cells().size() == 16);
  CHECK(t.query_magic_square(MagicRow::Octonion, MagicCol::F4).invariant_degree == 5);
  CHECK(t.query_magic_square(MagicRow::Base, MagicCol::A1).invariant_degree == 2);
  CHECK(t.query_magic_square(MagicRow::QuadraticExt, MagicCol::TwoA2).invariant_degree == 3);
  CHECK(t.query_magic_square(parse_magic_row("quaternion"), parse_magic_col("C3")).invariant_degree == 4);
  CHECK_THROWS_AS(parse_magic_row("sedenion"), InvalidArgument);
  // The grid is symmetric.
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      CHECK(t.query_magic_square(MagicRow(r), MagicCol(c)).invariant_degree ==
            t.query_magic_square(MagicRow(c), MagicCol(r)).invariant_degree);
}

TEST_CASE("group conditions") {
  const auto& t = Tables::builtin();
  const auto& e7 = t.conditions_for("E7");
  REQUIRE(e7.j_condition.has_value());
  CHECK(e7.j_condition->values == std::vector<int>{1, 0, 0, 0});
  CHECK(e7.j_condition->degrees == std::vector<int>{1, 3, 5, 9});
  CHECK(e7.parabolic == NodeSet{1});
  const auto& e8 = t.conditions_for("E8");
  CHECK(e8.j_condition->values == std::vector<int>{0, 0, 0, 1});
  CHECK_FALSE(e8.parabolic.has_value());
  CHECK(e8.parabolic_text() == "any");
  const auto& f4 = t.conditions_for("F4");
  CHECK_FALSE(f4.j_condition.has_value());
  CHECK(f4.parabolic == NodeSet{4});
  CHECK_THROWS_AS(t.conditions_for("E9"), InvalidArgument);
}

TEST_CASE("J conditions are admissible and use the J-table degrees") {
  for (const auto& row : Tables::builtin().conditions()) {
    if (!row.j_condition) continue;
    INFO(row.group);
    const auto& g = JTable::builtin().group(row.group);
    CHECK(row.j_condition->degrees == g.degrees);
    CHECK(is_admissible({g.label, 2, g.degrees, g.caps, row.j_condition->values}));
  }
}

TEST_CASE("2E6 binary motive top twist") {
  int d = Tables::builtin().conditions_for("2E6").degree;
  IntPoly u = IntPoly::from_exponents({0, (1 << (d - 1)) - 1});
  CHECK(u == IntPoly::from_exponents({0, 15}));
}

TEST_CASE("Tits indices by Rost invariant") {
  const auto& t = Tables::builtin();
  CHECK(t.tits_index_for_rost(RostCondition::Zero).index == "quasi-split");
  CHECK(t.tits_index_for_rost(RostCondition::NotPureSymbol).circled == NodeSet{2});
  CHECK(t.tits_index_for_rost(RostCondition::SymbolNotDivisibleByK).circled == NodeSet{1, 6});
  CHECK_FALSE(t.tits_index_for_rost(RostCondition::ImpossibleWithSplitTits).possible);
  CHECK(parse_rost_condition("not-pure-symbol") == RostCondition::NotPureSymbol);
  CHECK(to_string(RostCondition::Zero) == "zero");
  CHECK_FALSE(t.tits_index_note().empty());
}

TEST_CASE("Tits constructions keep structured predicates") {
  const auto& rows = Tables::builtin().tits_constructions();
  CHECK(rows.size() == 9);
  for (const auto& r : rows) {
    CHECK_FALSE(r.source_text.empty());
    CHECK(r.invariant_degree >= 1);
    CHECK(r.invariant_degree <= 3);
  }
}

TEST_CASE("malformed tables are rejected") {
  auto doc = load_document("tables");
  doc["tits_indices"]["rows"].erase(0);
  CHECK_THROWS_AS(Tables::from_json(doc), InvalidArgument);
  CHECK_THROWS_AS(Tables::from_json(nlohmann::json::object()), InvalidArgument);
}
