#include "lieflag/qform.hpp"

#include "lieflag/error.hpp"

namespace lieflag {

namespace {
void check_sign(int s) {
  if (s != 1 && s != -1) throw InvalidArgument("sign must be +1 or -1, got " + std::to_string(s));
}
}  // namespace

DiagFormR::DiagFormR(int positive, int negative) : pos_(positive), neg_(negative) {
  if (positive < 0 || negative < 0) throw InvalidArgument("negative entry count");
}

DiagFormR DiagFormR::one(int sign) {
  check_sign(sign);
  return sign > 0 ? DiagFormR(1, 0) : DiagFormR(0, 1);
}

std::string DiagFormR::to_string() const {
  std::string s = "<";
  if (pos_ > 0) s += "+^" + std::to_string(pos_);
  if (pos_ > 0 && neg_ > 0) s += ",";
  if (neg_ > 0) s += "-^" + std::to_string(neg_);
  return s + ">";
}

DiagFormR direct_sum(const DiagFormR& a, const DiagFormR& b) {
  return {a.positive() + b.positive(), a.negative() + b.negative()};
}

DiagFormR tensor(const DiagFormR& a, const DiagFormR& b) {
  return {a.positive() * b.positive() + a.negative() * b.negative(),
          a.positive() * b.negative() + a.negative() * b.positive()};
}

DiagFormR scale_by_sign(const DiagFormR& f, int sign) {
  check_sign(sign);
  return sign > 0 ? f : DiagFormR(f.negative(), f.positive());
}

DiagFormR multiple(int n, const DiagFormR& f) {
  if (n < 0) throw InvalidArgument("negative multiple");
  return {n * f.positive(), n * f.negative()};
}

int witt_index_r(const DiagFormR& f) { return f.witt_index(); }

DiagFormR norm_form(const CompositionAlgebraR& alg, bool pure_part) {
  const int d = alg.dim();
  DiagFormR full = alg.definite ? DiagFormR::positive_definite(d) : DiagFormR::hyperbolic(d / 2);
  if (!pure_part) return full;
  return {full.positive() - 1, full.negative()};
}

DiagFormR af_killing_form_e7(const CompositionAlgebraR& quaternion,
                             const CompositionAlgebraR& octonion, std::array<int, 3> gamma_signs) {
  if (quaternion.kind != CompositionAlgebraR::Kind::Quaternion ||
      octonion.kind != CompositionAlgebraR::Kind::Octonion)
    throw InvalidArgument("expected a quaternion and an octonion algebra");
  for (int g : gamma_signs) check_sign(g);
  const auto [g1, g2, g3] = gamma_signs;

  // Over R the inverse of a sign is itself and <2> = <1>.
  DiagFormR gamma = direct_sum(direct_sum(DiagFormR::one(g1 * g2), DiagFormR::one(g2 * g3)),
                               DiagFormR::one(g3 * g1));
  DiagFormR inner = multiple(4, norm_form(octonion, true));
  inner = direct_sum(inner, multiple(3, norm_form(quaternion, true)));
  inner = direct_sum(inner,
                     tensor(gamma, tensor(norm_form(octonion, false), norm_form(quaternion, false))));
  return scale_by_sign(inner, -1);
}

}  // namespace lieflag
