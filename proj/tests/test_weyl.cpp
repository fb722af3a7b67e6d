#include "doctest.h"
#include "lieflag/error.hpp"
#include "lieflag/weyl.hpp"
#include "oracles.hpp"

using namespace lieflag;

TEST_CASE("Weyl group orders") {
  auto order = [](const char* t) { return weyl_order(CartanType::parse(t)); };
  CHECK(order("A1") == 2);
  CHECK(order("G2") == 12);
  CHECK(order("B3") == 48);
  CHECK(order("D4") == 192);
  CHECK(order("F4") == 1152);
  CHECK(order("E6") == 51840);
  CHECK(order("E7") == 2903040);
  CHECK(order("E8") == BigInt(696729600));
}

TEST_CASE("product of degrees agrees with enumeration") {
  for (const char* t : {"A3", "B3", "C4", "D4", "G2", "F4", "E6", "E7", "E8"}) {
    RootSystem rs(CartanType::parse(t));
    CHECK(weyl_order_by_enumeration(rs) == weyl_order(rs));
  }
  for (const char* t : {"A4", "B4", "F4", "E6"}) {
    RootSystem rs(CartanType::parse(t));
    CHECK(BigInt(enumerate_full_group(rs)) == weyl_order(rs));
  }
}

TEST_CASE("fundamental degrees") {
  CHECK(fundamental_degrees(RootSystem(CartanType::parse("E6"))) == std::vector<int>{2, 5, 6, 8, 9, 12});
  CHECK(fundamental_degrees(RootSystem(CartanType::parse("E7"))) ==
        std::vector<int>{2, 6, 8, 10, 12, 14, 18});
  CHECK(fundamental_degrees(RootSystem(CartanType::parse("E8"))) ==
        std::vector<int>{2, 8, 12, 14, 18, 20, 24, 30});
  CHECK(fundamental_degrees(RootSystem(CartanType::parse("D4"))) == std::vector<int>{2, 4, 4, 6});
}

TEST_CASE("coset length counts agree with the matrix-group oracle") {
  struct Case {
    const char* type;
    std::vector<std::vector<int>> parabolics;
  };
  const std::vector<Case> cases{
      {"A3", {{}, {1}, {2}, {1, 3}, {1, 2, 3}}},
      {"B3", {{1}, {2}, {3}, {1, 2}, {2, 3}}},
      {"C3", {{1}, {3}, {1, 3}}},
      {"G2", {{1}, {2}}},
      {"D4", {{1, 3, 4}, {2}, {1, 2, 3}}},
      {"F4", {{1, 2, 3}, {2, 3, 4}, {1, 4}}},
  };
  for (const auto& c : cases) {
    RootSystem rs(CartanType::parse(c.type));
    auto g = oracle::generate(rs.cartan());
    CHECK(BigInt(g.length.size()) == weyl_order(rs));
    for (const auto& J : c.parabolics) {
      INFO(c.type, " J size ", J.size());
      CHECK(coset_length_counts(rs, NodeSet(J)) == oracle::coset_counts(g, J));
    }
  }
}

TEST_CASE("E6 coset counts agree with the oracle") {
  RootSystem rs(CartanType::parse("E6"));
  auto g = oracle::generate(rs.cartan());
  CHECK(g.length.size() == 51840);
  CHECK(coset_length_counts(rs, {1, 3, 4, 5, 6}) == oracle::coset_counts(g, {1, 3, 4, 5, 6}));
  CHECK(coset_length_counts(rs, {2, 3, 4, 5}) == oracle::coset_counts(g, {2, 3, 4, 5}));
}

TEST_CASE("minimal coset representatives have no right descent in J") {
  RootSystem rs(CartanType::parse("E6"));
  NodeSet J{2, 3, 4, 5};
  auto reps = minimal_coset_reps(rs, J);
  CHECK(reps.size() == 270);
  for (const auto& r : reps) {
    for (int j : J.nodes()) CHECK_FALSE(r.element.has_right_descent(rs, j));
    CHECK(static_cast<int>(r.element.reduced_word(rs).size()) == r.element.length());
  }
  for (std::size_t i = 1; i < reps.size(); ++i) CHECK(reps[i - 1].element < reps[i].element);
}

TEST_CASE("group operations") {
  RootSystem rs(CartanType::parse("D4"));
  auto w = WeylElement::identity(rs).left_multiply(rs, 2).left_multiply(rs, 1).left_multiply(rs, 3);
  CHECK(w.length() == 3);
  CHECK(w.compose(rs, w.inverse(rs)) == WeylElement::identity(rs));
  auto word = w.reduced_word(rs);
  auto rebuilt = WeylElement::identity(rs);
  for (int s : word) rebuilt = rebuilt.right_multiply(rs, s);
  CHECK(rebuilt == w);
  CHECK(longest_element_length(rs, NodeSet{}) == rs.num_positive());
  CHECK(longest_element_length(rs, NodeSet::all(4)) == 0);
  CHECK(longest_element_length(rs, {1, 2}) == 9);
}

TEST_CASE("double cosets agree with the orbit oracle") {
  struct Case {
    const char* type;
    std::vector<int> I, J;
  };
  const std::vector<Case> cases{{"A3", {1}, {2}},       {"A3", {1, 3}, {2}},   {"B3", {1}, {1, 2}},
                                {"C3", {2, 3}, {1, 3}}, {"D4", {1, 3}, {2, 4}}, {"G2", {1}, {1}},
                                {"A4", {2, 3}, {1, 4}}};
  for (const auto& c : cases) {
    RootSystem rs(CartanType::parse(c.type));
    auto g = oracle::generate(rs.cartan());
    std::vector<oracle::Cell> got;
    for (const auto& cell : double_cosets(rs, NodeSet(c.I), NodeSet(c.J)))
      got.push_back({cell.min_rep.length(), cell.orbit_size});
    std::sort(got.begin(), got.end());
    INFO(c.type);
    CHECK(got == oracle::double_cosets(g, c.I, c.J));
  }
}

TEST_CASE("orbit size is |W_I| / |W_{I cap wJ}|") {
  RootSystem rs(CartanType::parse("E6"));
  NodeSet I{3, 4, 5};
  for (NodeSet J : {NodeSet{1, 3, 4, 5, 6}, NodeSet{2, 3, 4, 5}}) {
    auto cells = double_cosets(rs, I, J, DiagramAut::from_swaps(6, {{1, 6}, {3, 5}}));
    BigInt total = 0;
    for (const auto& cell : cells) {
      total += cell.orbit_size;
      CHECK(BigInt(cell.orbit_size) ==
            parabolic_order(rs, I) / parabolic_order(rs, cell.intersection_nodes));
    }
    CHECK(total == weyl_order(rs) / parabolic_order(rs, J));
  }
}

TEST_CASE("double cosets reject a star action that moves the node sets") {
  RootSystem rs(CartanType::parse("E6"));
  CHECK_THROWS_AS(double_cosets(rs, {3, 4, 5}, {1}, DiagramAut::from_swaps(6, {{1, 6}, {3, 5}})),
                  InvalidArgument);
}
