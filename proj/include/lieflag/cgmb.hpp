#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lieflag/polyring.hpp"
#include "lieflag/rootsys.hpp"

namespace lieflag {

enum class MotiveKind { Tate, UpperBlock, CorQuadratic };

/// One Tate-twisted summand, seen through its Poincaré polynomial over a
/// splitting field.
struct MotiveTerm {
  MotiveKind kind = MotiveKind::Tate;
  IntPoly poly;  // used by UpperBlock only
  int shift = 0;

  static MotiveTerm tate(int shift) { return {MotiveKind::Tate, {}, shift}; }
  static MotiveTerm upper(IntPoly poly, int shift) { return {MotiveKind::UpperBlock, std::move(poly), shift}; }
  /// cor_{K/F}(Spec K){shift}: two points after base change to K.
  static MotiveTerm cor_quadratic(int shift) { return {MotiveKind::CorQuadratic, {}, shift}; }

  IntPoly contribution() const;
};

struct Decomposition {
  IntPoly total;
  std::vector<MotiveTerm> terms;
};

struct DecompositionCheck {
  bool holds = false;
  IntPoly residual;  // total minus the sum of contributions
};

/// Shifts of the Tate summands: minimal-representative lengths of the
/// double cosets W_kernel \ W / W_target that are star-invariant and contain
/// a single coset. Ascending, with multiplicity.
std::vector<int> tate_skeleton(const RootSystem& rs, NodeSet kernel, NodeSet target,
                               const DiagramAut& star);

DecompositionCheck check_decomposition(const Decomposition& d);

/// (block index, shift, multiplicity): `multiplicity` copies of t^shift * block.
struct WitnessTerm {
  std::size_t block = 0;
  int shift = 0;
  int multiplicity = 1;
  friend bool operator==(const WitnessTerm&, const WitnessTerm&) = default;
};

/// Searches for nonnegative multiplicities with
///   residual = sum t^shift * blocks[index],   shift >= min_shift.
/// Exhaustive backtracking on the lowest remaining exponent, larger blocks
/// tried first, failed states memoised. Returns the first witness found.
std::optional<std::vector<WitnessTerm>> express_residual(const IntPoly& residual,
                                                         const std::vector<IntPoly>& blocks,
                                                         int min_shift = 0);

IntPoly witness_sum(const std::vector<WitnessTerm>& witness, const std::vector<IntPoly>& blocks);

struct BlockDescriptor {
  std::string name;
  MotiveKind kind;
  IntPoly poly;
  std::string description;
};

/// Summand types allowed for X_{1,6} of a 2E6 group split by a quadratic
/// extension K, with their Poincaré polynomials over a splitting field:
/// U(X_{1,6}) -> 1 + t^15, U(Borel) -> 1 + t^3, cor_{K/F}(Spec K) -> 2.
std::vector<BlockDescriptor> isotropic_2e6_blocks();

/// A pinned decomposition identity.
struct DecompositionFixture {
  std::string name;
  std::string provenance;
  Decomposition decomposition;
  /// "exact": the identity must hold; "residual": the residual must be
  /// expressible in residual_blocks with shifts >= min_residual_shift.
  std::string expect = "exact";
  std::vector<IntPoly> residual_blocks;
  int min_residual_shift = 0;
};

std::vector<DecompositionFixture> load_decomposition_fixtures(const nlohmann::json& doc);

struct FixtureOutcome {
  bool pass = false;
  DecompositionCheck check;
  std::optional<std::vector<WitnessTerm>> witness;
};

FixtureOutcome evaluate_fixture(const DecompositionFixture& f);

}  // namespace lieflag
