#include "doctest.h"
#include "lieflag/error.hpp"
#include "lieflag/jinv.hpp"

using namespace lieflag;

TEST_CASE("upper motive polynomials") {
  CHECK(upper_motive_poly(make_profile("2E6", {1, 0, 0})) == IntPoly{1, 0, 0, 1});
  IntPoly e7 = IntPoly{1, 0, 0, 1} * IntPoly::from_exponents({0, 5}) * IntPoly::from_exponents({0, 9});
  CHECK(upper_motive_poly(make_profile("E7", {0, 1, 1, 1})) == e7);
  CHECK(upper_motive_poly(make_profile("E8", {0, 0, 0, 0})) == IntPoly{1});
  // j = 2 at degree 3: (t^12 - 1) / (t^3 - 1).
  CHECK(upper_motive_poly(make_profile("E8", {2, 0, 0, 0})) == IntPoly::from_exponents({0, 3, 6, 9}));
}

TEST_CASE("table parameters") {
  const auto& t = JTable::builtin();
  CHECK(t.group("2E6").degrees == std::vector<int>{3, 5, 9});
  CHECK(t.group("E7").degrees == std::vector<int>{1, 3, 5, 9});
  CHECK(t.group("E8").caps == std::vector<int>{3, 2, 1, 1});
  CHECK(t.group("D6").label == "1D6");
  CHECK_THROWS_AS(t.group("F4"), InvalidArgument);
  CHECK_THROWS_AS(t.group("G7"), InvalidArgument);
}

TEST_CASE("admissibility") {
  CHECK(is_admissible(max_profile("E8")));
  CHECK_THROWS_AS(make_profile("2E6", {2, 0, 0}), InvalidArgument);
  CHECK_THROWS_AS(make_profile("2E6", {1, 0}), InvalidArgument);
  // 2E6 and E7 chains: j_1 >= j_2 >= j_3 on the last three positions.
  CHECK_THROWS_AS(make_profile("2E6", {0, 1, 0}), InvalidArgument);
  CHECK_THROWS_AS(make_profile("E7", {0, 0, 1, 0}), InvalidArgument);
}

TEST_CASE("enumeration") {
  auto e8 = enumerate_admissible("E8");
  CHECK(e8.profiles.size() == 4 * 3 * 2 * 2);
  CHECK(e8.unconstrained_by_source);
  auto e6 = enumerate_admissible("2E6");
  CHECK(e6.profiles.size() == 4);
  CHECK_FALSE(e6.unconstrained_by_source);
  for (std::size_t i = 1; i < e8.profiles.size(); ++i)
    CHECK(e8.profiles[i - 1].values < e8.profiles[i].values);
  for (const auto& p : enumerate_admissible("E7").profiles) {
    IntPoly u = upper_motive_poly(p);
    int degree = 0;
    for (int i = 0; i < p.size(); ++i) degree += p.degrees[i] * ((1 << p.values[i]) - 1);
    CHECK(u.degree() == degree);
    CHECK(is_palindromic(u));
  }
}
