#include "doctest.h"
#include "lieflag/error.hpp"
#include "lieflag/poincare.hpp"
#include "lieflag/weyl.hpp"

using namespace lieflag;

namespace {
FlagVariety fv(const char* t, NodeSet circled) { return {CartanType::parse(t), circled}; }
}  // namespace

TEST_CASE("projective spaces and Grassmannians") {
  for (int n = 1; n <= 7; ++n)
    CHECK(poincare_poly(fv(("A" + std::to_string(n)).c_str(), {1})) == IntPoly::q_integer(n + 1));
  CHECK(poincare_poly(fv("A3", {2})) == IntPoly{1, 1, 2, 1, 1});
  // Full flags of A2: [2][3].
  CHECK(poincare_poly(fv("A2", {1, 2})) == IntPoly{1, 2, 2, 1});
  // Odd quadric B3/P_1 of dimension 5.
  CHECK(poincare_poly(fv("B3", {1})) == IntPoly::q_integer(6));
}

TEST_CASE("minuscule E6 and E7 varieties") {
  IntPoly cayley = poincare_poly(fv("E6", {1}));
  CHECK(cayley.value_at_one() == 27);
  CHECK(cayley.degree() == 16);
  CHECK(cayley == poincare_poly(fv("E6", {6})));
  IntPoly freudenthal = poincare_poly(fv("E7", {7}));
  CHECK(freudenthal.value_at_one() == 56);
  CHECK(freudenthal.degree() == 27);
}

TEST_CASE("dimensions") {
  CHECK(dim_flag(fv("E6", {2})) == 21);
  CHECK(dim_flag(fv("E6", {1, 6})) == 24);
  CHECK(dim_flag(fv("E7", {1})) == 33);
  CHECK(dim_flag(fv("E8", {1, 2, 3, 4, 5, 6, 7, 8})) == 120);
}

TEST_CASE("coefficients of X_2 and X_{1,6}") {
  IntPoly x2 = poincare_poly(fv("E6", {2}));
  IntPoly x16 = poincare_poly(fv("E6", {1, 6}));
  CHECK(x2.value_at_one() == 72);
  CHECK(x16.value_at_one() == 270);
  const std::vector<long long> head{1, 2, 3, 4, 7, 9, 11, 13, 17, 18, 19, 20, 22};
  for (std::size_t i = 0; i < head.size(); ++i) CHECK(x16.coeff(static_cast<int>(i)) == head[i]);
}

TEST_CASE("enumeration agrees with the degree formula and is palindromic") {
  for (const char* t : {"B4", "C4", "D5", "F4", "E6", "E7"}) {
    CartanType ct = CartanType::parse(t);
    for (int node = 1; node <= ct.rank; ++node) {
      FlagVariety v{ct, NodeSet{node}};
      IntPoly p = poincare_poly(v);
      INFO(v.label());
      CHECK(p == poincare_poly_by_degrees(v));
      CHECK(is_palindromic(p));
      CHECK(p.degree() == dim_flag(v));
      RootSystem rs(ct);
      CHECK(p.value_at_one() == weyl_order(rs) / parabolic_order(rs, v.levi()));
    }
  }
}

TEST_CASE("E8 Borel variety falls back to the degree formula") {
  IntPoly p = poincare_poly(fv("E8", {1, 2, 3, 4, 5, 6, 7, 8}));
  CHECK(p.value_at_one() == weyl_order(CartanType::parse("E8")));
  CHECK(p.degree() == 120);
}

TEST_CASE("conormed polynomials of 2E6") {
  IntPoly n2 = conormed_poincare(fv("2E6", {2}));
  IntPoly n16 = conormed_poincare(fv("2E6", {1, 6}));
  CHECK(n2.degree() == 21);
  CHECK(n16.degree() == 24);
  CHECK(n2.value_at_one() == 24);
  CHECK(n16.value_at_one() == 24);
  CHECK(n2.has_nonnegative_coefficients());
  CHECK(n16.has_nonnegative_coefficients());
  CHECK(is_palindromic(n2));
  CHECK(is_palindromic(n16));
  IntPoly b{1, 0, 0, 1};
  CHECK(divides_ring(n2, b).has_value());
  CHECK(divides_ring(n16, b).has_value());
  CHECK_FALSE(divides_semiring(n2, b).has_value());
  CHECK_FALSE(divides_semiring(n16, b).has_value());
  CHECK_THROWS_AS(conormed_poincare(fv("2E6", {4})), NotSpecifiedBySource);
}

TEST_CASE("invalid varieties") {
  CHECK_THROWS_AS(poincare_poly(fv("E6", {})), InvalidArgument);
  CHECK_THROWS_AS(poincare_poly(fv("A2", {3})), InvalidArgument);
}
