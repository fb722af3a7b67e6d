#pragma once

#include <array>
#include <string>

namespace lieflag {

/// Diagonal quadratic form over the reals, up to positive rescaling of the
/// entries: only the number of positive and negative entries matters.
class DiagFormR {
 public:
  DiagFormR() = default;
  DiagFormR(int positive, int negative);
  static DiagFormR positive_definite(int dim) { return {dim, 0}; }
  static DiagFormR negative_definite(int dim) { return {0, dim}; }
  static DiagFormR hyperbolic(int planes) { return {planes, planes}; }
  /// <s> for s = +1 or -1.
  static DiagFormR one(int sign);

  int positive() const { return pos_; }
  int negative() const { return neg_; }
  int dim() const { return pos_ + neg_; }
  int signature() const { return pos_ - neg_; }
  int witt_index() const { return pos_ < neg_ ? pos_ : neg_; }
  bool is_anisotropic() const { return witt_index() == 0; }

  /// "<+^4,-^3>"
  std::string to_string() const;

  friend bool operator==(const DiagFormR&, const DiagFormR&) = default;

 private:
  int pos_ = 0;
  int neg_ = 0;
};

DiagFormR direct_sum(const DiagFormR& a, const DiagFormR& b);
DiagFormR tensor(const DiagFormR& a, const DiagFormR& b);
/// <sign> * f; sign must be +1 or -1 (a positive scalar such as <2> is the
/// identity over R).
DiagFormR scale_by_sign(const DiagFormR& f, int sign);
/// f ⊥ ... ⊥ f, n copies.
DiagFormR multiple(int n, const DiagFormR& f);

int witt_index_r(const DiagFormR& f);

struct CompositionAlgebraR {
  enum class Kind { Quaternion, Octonion };
  Kind kind = Kind::Quaternion;
  /// Division algebra (positive definite norm) versus split (hyperbolic norm).
  bool definite = true;

  int dim() const { return kind == Kind::Quaternion ? 4 : 8; }
};

/// Norm form, or its pure part (the norm minus one <+1> entry). The split
/// norm is dim/2 hyperbolic planes.
DiagFormR norm_form(const CompositionAlgebraR& alg, bool pure_part);

/// Killing form of the E7 obtained from Q, O and gamma:
///   <-1> (4 n'_O ⊥ 3 <2> n'_Q ⊥ <g1 g2^-1, g2 g3^-1, g3 g1^-1> n_O n_Q),
/// evaluated on signs; each gamma entry is +1 or -1.
DiagFormR af_killing_form_e7(const CompositionAlgebraR& quaternion,
                             const CompositionAlgebraR& octonion, std::array<int, 3> gamma_signs);

}  // namespace lieflag
