#include "doctest.h"
#include "lieflag/cgmb.hpp"
#include "lieflag/data.hpp"
#include "lieflag/poincare.hpp"
#include "lieflag/weyl.hpp"

using namespace lieflag;

namespace {
const DiagramAut kStar = DiagramAut::from_swaps(6, {{1, 6}, {3, 5}});
}

TEST_CASE("Tate skeletons over the D4-free kernel") {
  RootSystem rs(CartanType::parse("E6"));
  CHECK(tate_skeleton(rs, {3, 4, 5}, {1, 3, 4, 5, 6}, kStar) == std::vector<int>{0, 6, 15, 21});
  CHECK(tate_skeleton(rs, {3, 4, 5}, {2, 3, 4, 5}, kStar) == std::vector<int>{0, 9, 15, 24});
  CHECK(double_cosets(rs, {3, 4, 5}, {1, 3, 4, 5, 6}, kStar).size() == 17);
  CHECK(double_cosets(rs, {3, 4, 5}, {2, 3, 4, 5}, kStar).size() == 51);
}

TEST_CASE("a split group has only Tate summands") {
  // Empty kernel: every coset is its own double coset.
  RootSystem rs(CartanType::parse("E6"));
  auto shifts = tate_skeleton(rs, {}, {1, 3, 4, 5, 6}, DiagramAut::identity(6));
  IntPoly sum;
  for (int s : shifts) sum += IntPoly::monomial(s);
  CHECK(sum == poincare_poly({CartanType::parse("E6"), {2}}));
}

TEST_CASE("check_decomposition") {
  Decomposition d{IntPoly{1, 1}, {MotiveTerm::tate(0), MotiveTerm::tate(1)}};
  CHECK(check_decomposition(d).holds);
  d.terms.pop_back();
  auto c = check_decomposition(d);
  CHECK_FALSE(c.holds);
  CHECK(c.residual == IntPoly{0, 1});
  CHECK(MotiveTerm::cor_quadratic(2).contribution() == IntPoly{0, 0, 2});
  CHECK(MotiveTerm::upper(IntPoly{1, 0, 0, 1}, 1).contribution() == IntPoly{0, 1, 0, 0, 1});
}

TEST_CASE("express_residual") {
  std::vector<IntPoly> blocks{IntPoly{1, 0, 0, 1}, IntPoly{2}};
  IntPoly r = IntPoly{0, 1, 0, 2, 1} + IntPoly{0, 0, 0, 0, 0, 0, 0, 4};
  auto w = express_residual(r, blocks, 1);
  REQUIRE(w.has_value());
  CHECK(witness_sum(*w, blocks) == r);
  for (const auto& t : *w) CHECK(t.shift >= 1);
  // Odd constant coefficient with only 1 + t^3 and 2 at shifts >= 0.
  CHECK_FALSE(express_residual(IntPoly{1}, blocks).has_value());
  // Shift bound excludes t^0.
  CHECK_FALSE(express_residual(IntPoly{2}, blocks, 1).has_value());
  CHECK(express_residual(IntPoly{}, blocks).value().empty());
}

TEST_CASE("residuals of the isotropic 2E6 varieties") {
  std::vector<IntPoly> blocks{IntPoly{1, 0, 0, 1}, IntPoly{2}};
  IntPoly top = IntPoly::from_exponents({0, 15});
  IntPoly r16 = poincare_poly({CartanType::parse("E6"), {1, 6}}) - IntPoly::from_exponents({0, 9}) * top;
  IntPoly r2 = poincare_poly({CartanType::parse("E6"), {2}}) - IntPoly::from_exponents({0, 6}) * top;
  for (const IntPoly& r : {r16, r2}) {
    REQUIRE(r.has_nonnegative_coefficients());
    auto w = express_residual(r, blocks, 1);
    REQUIRE(w.has_value());
    CHECK(witness_sum(*w, blocks) == r);
  }
}

TEST_CASE("pinned fixtures") {
  auto fixtures = load_decomposition_fixtures(load_document("fixtures"));
  CHECK(fixtures.size() >= 4);
  for (const auto& f : fixtures) {
    INFO(f.name);
    CHECK_FALSE(f.provenance.empty());
    CHECK(evaluate_fixture(f).pass);
  }
}

TEST_CASE("block catalogue") {
  auto blocks = isotropic_2e6_blocks();
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0].poly == IntPoly::from_exponents({0, 15}));
  CHECK(blocks[1].poly == IntPoly{1, 0, 0, 1});
  CHECK(blocks[2].poly == IntPoly{2});
}
