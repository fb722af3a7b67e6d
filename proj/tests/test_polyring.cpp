#include <random>

#include "doctest.h"
#include "lieflag/error.hpp"
#include "lieflag/polyring.hpp"

using namespace lieflag;

namespace {

BigInt binomial(int n, int k) {
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

IntPoly random_poly(std::mt19937_64& rng, int max_degree, int lo, int hi) {
  std::uniform_int_distribution<int> deg(0, max_degree), coef(lo, hi);
  std::vector<BigInt> c(deg(rng) + 1);
  for (auto& x : c) x = coef(rng);
  return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("basic arithmetic") {
  IntPoly a{1, 1};
  CHECK(a * a == IntPoly{1, 2, 1});
  CHECK(a - a == IntPoly{});
  CHECK((a - a).degree() == -1);
  CHECK(IntPoly{0, 0, 3}.lowest_exponent() == 2);
  CHECK(IntPoly::monomial(3) + IntPoly::constant(1) == IntPoly{1, 0, 0, 1});
  CHECK(IntPoly::q_integer(4) == IntPoly{1, 1, 1, 1});
  CHECK(IntPoly::from_exponents({0, 3, 3}) == IntPoly{1, 0, 0, 2});
  CHECK(IntPoly{1, 0, 0, 1}.shifted(2) == IntPoly{0, 0, 1, 0, 0, 1});
  CHECK(IntPoly{1, -2, 0, 1}.to_string() == "1 - 2t + t^3");
  CHECK(IntPoly{1, 2, 3}.eval(2) == 17);
  CHECK(IntPoly{1, 2, 3}.value_at_one() == 6);
}

TEST_CASE("big coefficients stay exact") {
  IntPoly p{1};
  for (int i = 0; i < 200; ++i) p *= IntPoly{1, 1};
  CHECK(p.coeff(100) == binomial(200, 100));
  CHECK(p.value_at_one() == BigInt(1) << 200);
  auto q = divides_ring(p, IntPoly{1, 1});
  REQUIRE(q.has_value());
  CHECK(q->coeff(100) == binomial(199, 100));
}

TEST_CASE("long division") {
  auto r = divide(IntPoly{-1, 0, 0, 1}, IntPoly{-1, 1});
  CHECK(r.exact());
  CHECK(r.quotient == IntPoly{1, 1, 1});
  auto s = divide(IntPoly{1, 0, 1}, IntPoly{1, 1});
  CHECK_FALSE(s.exact());
  CHECK(s.remainder == IntPoly{2});
  // Non-monic divisor leaving Z[t].
  CHECK_FALSE(divide(IntPoly{1, 1}, IntPoly{0, 2}).integral);
  CHECK_THROWS_AS(divide(IntPoly{1}, IntPoly{}), InvalidArgument);
}

TEST_CASE("eval_rational") {
  std::vector<IntPoly> num{IntPoly::q_integer(6), IntPoly::q_integer(4)};
  std::vector<IntPoly> den{IntPoly::q_integer(2), IntPoly::q_integer(2)};
  CHECK(eval_rational(num, den) == IntPoly{1, 0, 1, 0, 1} * IntPoly{1, 0, 1});
  // Gaussian binomial [4 choose 2]_t, the Poincare polynomial of Gr(2,4).
  std::vector<IntPoly> gr_num{IntPoly::q_integer(4), IntPoly::q_integer(3)};
  std::vector<IntPoly> gr_den{IntPoly::q_integer(2), IntPoly::q_integer(1)};
  CHECK(eval_rational(gr_num, gr_den) == IntPoly{1, 1, 2, 1, 1});
  std::vector<IntPoly> bad{IntPoly{1, 1}};
  std::vector<IntPoly> by{IntPoly{1, 0, 1}};
  CHECK_THROWS_AS(eval_rational(bad, by), InexactDivision);
}

TEST_CASE("ring versus semiring divisibility") {
  // n = (1 + t^3)(1 + t + t^2) = (1 + t)(1 + t + t^2)(1 - t + t^2).
  IntPoly n = IntPoly{1, 0, 0, 1} * IntPoly{1, 1, 1};
  IntPoly d = IntPoly{1, 1} * IntPoly{1, 1, 1};
  CHECK(n.has_nonnegative_coefficients());
  CHECK(divides_ring(n, d) == IntPoly{1, -1, 1});
  CHECK_FALSE(divides_semiring(n, d).has_value());
  CHECK(divides_semiring(n, IntPoly{1, 1, 1}) == IntPoly{1, 0, 0, 1});
  // A common power of t is split off before dividing.
  CHECK(divides_semiring(IntPoly{1, 0, 0, 1}.shifted(4), IntPoly{0, 1, 0, 0, 1}) ==
        IntPoly{0, 0, 0, 1});
  CHECK_THROWS_AS(divides_semiring(n, IntPoly{1, -1}), InvalidArgument);
  CHECK_THROWS_AS(divides_ring(n, IntPoly{}), InvalidArgument);
}

TEST_CASE("semiring divisibility implies ring divisibility (fuzzed)") {
  std::mt19937_64 rng(7);
  int semiring = 0;
  for (int i = 0; i < 12000; ++i) {
    IntPoly q = random_poly(rng, 4, 0, 2);
    if (q.is_zero()) continue;
    IntPoly p = (i % 3 == 0) ? random_poly(rng, 8, 0, 3) : q * random_poly(rng, 4, -1, 3);
    if (!p.has_nonnegative_coefficients()) continue;
    auto s = divides_semiring(p, q);
    if (!s) continue;
    ++semiring;
    auto r = divides_ring(p, q);
    REQUIRE(r.has_value());
    CHECK(*r * q == p);
    CHECK(s->has_nonnegative_coefficients());
  }
  CHECK(semiring > 1000);
}

TEST_CASE("ring quotients multiply back (fuzzed)") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 3000; ++i) {
    IntPoly a = random_poly(rng, 6, -5, 5), b = random_poly(rng, 4, -5, 5);
    if (b.is_zero()) continue;
    auto q = divides_ring(a * b, b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
}

TEST_CASE("palindromes") {
  CHECK(is_palindromic(IntPoly{1, 2, 1}));
  // Measured from t^0, so a shifted palindrome does not count.
  CHECK_FALSE(is_palindromic(IntPoly{0, 1, 3, 1}));
  CHECK_FALSE(is_palindromic(IntPoly{1, 2}));
}
