#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lieflag/error.hpp"

namespace lieflag {

using BigInt = boost::multiprecision::cpp_int;

/// Univariate polynomial in t with arbitrary-precision integer coefficients.
/// Trailing zero coefficients are always stripped; the zero polynomial has
/// no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  /// Coefficients listed from the constant term up: {1, 0, 0, 1} is 1 + t^3.
  IntPoly(std::initializer_list<long long> coeffs);
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(int exponent, const BigInt& c = 1);
  /// Sum of t^e over the listed exponents (repeats add up).
  static IntPoly from_exponents(std::initializer_list<int> exponents);
  static IntPoly from_exponents(std::span<const int> exponents);
  /// 1 + t + ... + t^(n-1).
  static IntPoly q_integer(int n);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Smallest exponent with a nonzero coefficient; -1 for zero.
  int lowest_exponent() const;
  BigInt coeff(int exponent) const;
  const BigInt& leading() const { return c_.back(); }
  std::span<const BigInt> coefficients() const { return c_; }

  BigInt eval(const BigInt& t) const;
  BigInt value_at_one() const;
  bool has_nonnegative_coefficients() const;

  /// Multiplies by t^k (k >= 0) or divides by t^-k when every dropped
  /// coefficient is zero.
  IntPoly shifted(int k) const;

  std::string to_string() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(IntPoly a);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void normalize();
  std::vector<BigInt> c_;
};

/// Quotient and remainder of long division in Z[t]. `integral` is false if a
/// quotient coefficient would leave Z; the division stops there and the
/// remainder is the partial one.
struct DivisionResult {
  IntPoly quotient;
  IntPoly remainder;
  bool integral = true;

  bool exact() const { return integral && remainder.is_zero(); }
};

DivisionResult divide(const IntPoly& p, const IntPoly& q);

/// Raised when a rational expression does not reduce to a polynomial.
class InexactDivision : public Error {
 public:
  explicit InexactDivision(IntPoly remainder);
  const IntPoly& remainder() const { return remainder_; }

 private:
  IntPoly remainder_;
};

IntPoly product(std::span<const IntPoly> factors);

/// Multiplies out both factor lists and divides exactly. Throws
/// InexactDivision carrying the remainder when the quotient is not in Z[t].
IntPoly eval_rational(std::span<const IntPoly> numerator_factors,
                      std::span<const IntPoly> denominator_factors);

/// Quotient p / q when q divides p in Z[t]. Throws InvalidArgument for q = 0.
std::optional<IntPoly> divides_ring(const IntPoly& p, const IntPoly& q);

/// Quotient p / q when p = q r with r in N0[t].
///
/// q must have nonnegative coefficients. A common power of t is split off
/// first, after which the Z[t] quotient is the only candidate, so the test is
/// exact division plus a sign check on the quotient.
std::optional<IntPoly> divides_semiring(const IntPoly& p, const IntPoly& q);

/// c_i = c_{deg - i} for all i.
bool is_palindromic(const IntPoly& p);

}  // namespace lieflag
