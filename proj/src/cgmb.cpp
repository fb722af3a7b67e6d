#include "lieflag/cgmb.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "lieflag/jinv.hpp"
#include "lieflag/poincare.hpp"
#include "lieflag/serialize.hpp"
#include "lieflag/weyl.hpp"

namespace lieflag {

IntPoly MotiveTerm::contribution() const {
  if (shift < 0) throw InvalidArgument("negative Tate twist");
  switch (kind) {
    case MotiveKind::Tate: return IntPoly::monomial(shift);
    case MotiveKind::UpperBlock: return poly.shifted(shift);
    case MotiveKind::CorQuadratic: return IntPoly::monomial(shift, 2);
  }
  return {};
}

std::vector<int> tate_skeleton(const RootSystem& rs, NodeSet kernel, NodeSet target,
                               const DiagramAut& star) {
  std::vector<int> shifts;
  for (const auto& cell : double_cosets(rs, kernel, target, star))
    if (cell.orbit_size == 1 && cell.star_invariant) shifts.push_back(cell.min_rep.length());
  std::sort(shifts.begin(), shifts.end());
  return shifts;
}

DecompositionCheck check_decomposition(const Decomposition& d) {
  IntPoly residual = d.total;
  for (const auto& term : d.terms) residual -= term.contribution();
  return {residual.is_zero(), residual};
}

namespace {

class ResidualSearch {
 public:
  ResidualSearch(const std::vector<IntPoly>& blocks, int min_shift)
      : blocks_(blocks), min_shift_(min_shift) {
    order_.resize(blocks.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      if (blocks[a].degree() != blocks[b].degree()) return blocks[a].degree() > blocks[b].degree();
      return blocks[a].value_at_one() > blocks[b].value_at_one();
    });
  }

  bool run(std::vector<BigInt>& r) {
    auto lowest = std::find_if(r.begin(), r.end(), [](const BigInt& c) { return c != 0; });
    if (lowest == r.end()) return true;
    if (failed_.count(r)) return false;
    const int e = static_cast<int>(lowest - r.begin());
    for (std::size_t b : order_) {
      const IntPoly& block = blocks_[b];
      const int low = block.lowest_exponent();
      const int shift = e - low;
      if (shift < min_shift_ || shift + block.degree() >= static_cast<int>(r.size())) continue;
      auto coeffs = block.coefficients();
      bool fits = true;
      for (int k = low; k <= block.degree() && fits; ++k) fits = r[shift + k] >= coeffs[k];
      if (!fits) continue;
      for (int k = low; k <= block.degree(); ++k) r[shift + k] -= coeffs[k];
      path_.push_back({b, shift, 1});
      if (run(r)) return true;
      path_.pop_back();
      for (int k = low; k <= block.degree(); ++k) r[shift + k] += coeffs[k];
    }
    failed_.insert(r);
    return false;
  }

  std::vector<WitnessTerm> witness() const {
    std::vector<WitnessTerm> out;
    for (const auto& step : path_) {
      auto it = std::find_if(out.begin(), out.end(), [&](const WitnessTerm& w) {
        return w.block == step.block && w.shift == step.shift;
      });
      if (it == out.end())
        out.push_back(step);
      else
        ++it->multiplicity;
    }
    std::sort(out.begin(), out.end(), [](const WitnessTerm& a, const WitnessTerm& b) {
      return std::tie(a.shift, a.block) < std::tie(b.shift, b.block);
    });
    return out;
  }

 private:
  const std::vector<IntPoly>& blocks_;
  int min_shift_;
  std::vector<std::size_t> order_;
  std::set<std::vector<BigInt>> failed_;
  std::vector<WitnessTerm> path_;
};

}  // namespace

std::optional<std::vector<WitnessTerm>> express_residual(const IntPoly& residual,
                                                         const std::vector<IntPoly>& blocks,
                                                         int min_shift) {
  if (!residual.has_nonnegative_coefficients())
    throw InvalidArgument("residual has a negative coefficient: " + residual.to_string());
  for (const auto& b : blocks)
    if (b.is_zero() || !b.has_nonnegative_coefficients())
      throw InvalidArgument("blocks must be nonzero with nonnegative coefficients");
  std::vector<BigInt> r(residual.coefficients().begin(), residual.coefficients().end());
  ResidualSearch search(blocks, min_shift);
  if (!search.run(r)) return std::nullopt;
  return search.witness();
}

IntPoly witness_sum(const std::vector<WitnessTerm>& witness, const std::vector<IntPoly>& blocks) {
  IntPoly sum;
  for (const auto& w : witness) sum += blocks.at(w.block).shifted(w.shift) * IntPoly{w.multiplicity};
  return sum;
}

std::vector<BlockDescriptor> isotropic_2e6_blocks() {
  const IntPoly borel = upper_motive_poly(make_profile("2E6", {1, 0, 0}));
  return {
      {"U(X_{1,6})", MotiveKind::UpperBlock, IntPoly::from_exponents({0, 15}),
       "upper motive of X_{1,6}; generically split binary motive"},
      {"U(X_{1,2,3,4,5,6})", MotiveKind::UpperBlock, borel,
       "upper motive of the Borel variety, J = (1,0,0)"},
      {"cor_{K/F}(Spec K)", MotiveKind::CorQuadratic, IntPoly{2},
       "corestriction of the quadratic point"},
  };
}

namespace {

IntPoly poly_from_spec(const nlohmann::json& j) {
  if (j.contains("flag")) {
    const auto& f = j.at("flag");
    FlagVariety fv{CartanType::parse(f.at("ambient").get<std::string>()),
                   NodeSet(f.at("circled").get<std::vector<int>>())};
    return poincare_poly(fv);
  }
  if (j.contains("factors")) {
    IntPoly acc{1};
    for (const auto& factor : j.at("factors")) acc *= poly_from_json(factor);
    return acc;
  }
  return poly_from_json(j);
}

}  // namespace

std::vector<DecompositionFixture> load_decomposition_fixtures(const nlohmann::json& doc) {
  std::vector<DecompositionFixture> out;
  try {
    for (const auto& f : doc.at("decompositions")) {
      DecompositionFixture fx;
      fx.name = f.at("name").get<std::string>();
      fx.provenance = f.value("provenance", "");
      fx.expect = f.value("expect", "exact");
      fx.decomposition.total = poly_from_spec(f.at("total"));
      for (const auto& t : f.at("terms")) {
        const std::string kind = t.at("kind").get<std::string>();
        IntPoly poly = kind == "upper" ? poly_from_spec(t) : IntPoly{};
        for (int s : t.at("shifts").get<std::vector<int>>()) {
          if (kind == "tate")
            fx.decomposition.terms.push_back(MotiveTerm::tate(s));
          else if (kind == "upper")
            fx.decomposition.terms.push_back(MotiveTerm::upper(poly, s));
          else if (kind == "cor")
            fx.decomposition.terms.push_back(MotiveTerm::cor_quadratic(s));
          else
            throw InvalidArgument("unknown motive kind '" + kind + "' in fixture " + fx.name);
        }
      }
      for (const auto& b : f.value("residual_blocks", nlohmann::json::array()))
        fx.residual_blocks.push_back(poly_from_spec(b));
      fx.min_residual_shift = f.value("min_residual_shift", 0);
      if (fx.expect != "exact" && fx.expect != "residual")
        throw InvalidArgument("fixture " + fx.name + ": expect must be 'exact' or 'residual'");
      out.push_back(std::move(fx));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed fixture document: ") + e.what());
  }
  return out;
}

FixtureOutcome evaluate_fixture(const DecompositionFixture& f) {
  FixtureOutcome out;
  out.check = check_decomposition(f.decomposition);
  if (f.expect == "exact") {
    out.pass = out.check.holds;
    return out;
  }
  if (!out.check.residual.has_nonnegative_coefficients()) return out;
  out.witness = express_residual(out.check.residual, f.residual_blocks, f.min_residual_shift);
  out.pass = out.witness.has_value() &&
             witness_sum(*out.witness, f.residual_blocks) == out.check.residual;
  return out;
}

}  // namespace lieflag
