#pragma once

#include "lieflag/polyring.hpp"
#include "lieflag/rootsys.hpp"

namespace lieflag {

/// X_I: the variety of parabolic subgroups of type I. The circled nodes I
/// are the ones removed from the Levi, so the Weyl-side parabolic is on the
/// complement of I. I = all nodes is the Borel variety.
struct FlagVariety {
  CartanType ambient;
  NodeSet circled;

  NodeSet levi() const { return circled.complement(ambient.rank); }
  std::string label() const;  // e.g. "2E6/X_{1,6}"
};

/// Above this many cosets poincare_poly switches from enumeration to the
/// degree-quotient formula.
inline constexpr std::uint64_t kEnumerationCap = 3'000'000;

/// Sum of t^l(w) over the minimal representatives of W / W_levi.
/// Results are memoised per (type, circled nodes).
IntPoly poincare_poly(const FlagVariety& fv);

/// prod [d_i]_t over W divided by prod [d_i]_t over the Levi components.
IntPoly poincare_poly_by_degrees(const FlagVariety& fv);

/// Number of positive roots outside the Levi.
int dim_flag(const FlagVariety& fv);

/// The conormed Poincaré polynomials known for 2E6 (X_2 and X_{1,6});
/// anything else throws NotSpecifiedBySource.
IntPoly conormed_poincare(const FlagVariety& fv);

}  // namespace lieflag
