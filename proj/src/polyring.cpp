#include "lieflag/polyring.hpp"

#include <algorithm>

namespace lieflag {

IntPoly::IntPoly(std::initializer_list<long long> coeffs) : c_(coeffs.begin(), coeffs.end()) {
  normalize();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(int exponent, const BigInt& c) {
  if (exponent < 0) throw InvalidArgument("negative exponent");
  std::vector<BigInt> v(exponent + 1);
  v[exponent] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::from_exponents(std::initializer_list<int> exponents) {
  return from_exponents(std::span<const int>(exponents.begin(), exponents.size()));
}

IntPoly IntPoly::from_exponents(std::span<const int> exponents) {
  IntPoly p;
  for (int e : exponents) p += monomial(e);
  return p;
}

IntPoly IntPoly::q_integer(int n) {
  if (n < 1) throw InvalidArgument("q-integer needs n >= 1");
  return IntPoly(std::vector<BigInt>(n, BigInt(1)));
}

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int IntPoly::lowest_exponent() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

BigInt IntPoly::coeff(int exponent) const {
  if (exponent < 0 || exponent >= static_cast<int>(c_.size())) return 0;
  return c_[exponent];
}

BigInt IntPoly::eval(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

BigInt IntPoly::value_at_one() const {
  BigInt acc = 0;
  for (const auto& c : c_) acc += c;
  return acc;
}

bool IntPoly::has_nonnegative_coefficients() const {
  return std::all_of(c_.begin(), c_.end(), [](const BigInt& c) { return c >= 0; });
}

IntPoly IntPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  if (k > 0) {
    std::vector<BigInt> v(k);
    v.insert(v.end(), c_.begin(), c_.end());
    return IntPoly(std::move(v));
  }
  if (lowest_exponent() < -k) throw InvalidArgument("shift would drop nonzero coefficients");
  return IntPoly(std::vector<BigInt>(c_.begin() - k, c_.end()));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t e = 0; e < c_.size(); ++e) {
    const BigInt& c = c_[e];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (e == 0 || mag != 1) out += mag.str();
    if (e >= 1) out += "t";
    if (e >= 2) out += "^" + std::to_string(e);
  }
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

IntPoly operator-(IntPoly a) {
  for (auto& c : a.c_) c = -c;
  return a;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(v));
}

DivisionResult divide(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw InvalidArgument("division by the zero polynomial");
  DivisionResult res;
  std::vector<BigInt> rem(p.coefficients().begin(), p.coefficients().end());
  std::vector<BigInt> quo;
  const int dq = q.degree();
  const BigInt& lead = q.leading();
  auto qc = q.coefficients();
  for (int d = static_cast<int>(rem.size()) - 1; d >= dq; --d) {
    if (rem[d] == 0) continue;
    if (rem[d] % lead != 0) {
      res.integral = false;
      break;
    }
    BigInt factor = rem[d] / lead;
    const int shift = d - dq;
    if (quo.empty()) quo.resize(shift + 1);
    quo[shift] = factor;
    for (int k = 0; k <= dq; ++k) rem[shift + k] -= factor * qc[k];
  }
  res.quotient = IntPoly(std::move(quo));
  res.remainder = IntPoly(std::move(rem));
  return res;
}

InexactDivision::InexactDivision(IntPoly remainder)
    : Error("rational expression is not a polynomial; remainder " + remainder.to_string()),
      remainder_(std::move(remainder)) {}

IntPoly product(std::span<const IntPoly> factors) {
  IntPoly acc{1};
  for (const auto& f : factors) acc *= f;
  return acc;
}

IntPoly eval_rational(std::span<const IntPoly> numerator_factors,
                      std::span<const IntPoly> denominator_factors) {
  IntPoly num = product(numerator_factors);
  IntPoly den = product(denominator_factors);
  if (den.is_zero()) throw InvalidArgument("zero denominator");
  DivisionResult r = divide(num, den);
  if (!r.exact()) throw InexactDivision(r.remainder);
  return r.quotient;
}

std::optional<IntPoly> divides_ring(const IntPoly& p, const IntPoly& q) {
  DivisionResult r = divide(p, q);
  if (!r.exact()) return std::nullopt;
  return r.quotient;
}

std::optional<IntPoly> divides_semiring(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (!q.has_nonnegative_coefficients())
    throw InvalidArgument("semiring divisor must have nonnegative coefficients");
  if (p.is_zero()) return IntPoly{};
  const int s = q.lowest_exponent();
  if (p.lowest_exponent() < s) return std::nullopt;
  DivisionResult r = divide(p.shifted(-s), q.shifted(-s));
  if (!r.exact() || !r.quotient.has_nonnegative_coefficients()) return std::nullopt;
  return r.quotient;
}

bool is_palindromic(const IntPoly& p) {
  auto c = p.coefficients();
  return std::equal(c.begin(), c.begin() + c.size() / 2, c.rbegin());
}

}  // namespace lieflag
