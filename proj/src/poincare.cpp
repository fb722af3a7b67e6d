#include "lieflag/poincare.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

#include "lieflag/weyl.hpp"

namespace lieflag {

std::string FlagVariety::label() const {
  return ambient.label() + "/X_{" + circled.to_string() + "}";
}

namespace {

void check(const FlagVariety& fv) {
  fv.ambient.validate();
  if (fv.circled.empty()) throw InvalidArgument("flag variety needs at least one circled node");
  if (!fv.circled.subset_of(NodeSet::all(fv.ambient.rank)))
    throw InvalidArgument("circled nodes exceed the rank of " + fv.ambient.label());
}

IntPoly enumerate(const RootSystem& rs, NodeSet levi) {
  auto counts = coset_length_counts(rs, levi);
  std::vector<BigInt> coeffs(counts.begin(), counts.end());
  return IntPoly(std::move(coeffs));
}

}  // namespace

IntPoly poincare_poly_by_degrees(const FlagVariety& fv) {
  check(fv);
  RootSystem rs(fv.ambient);
  std::vector<IntPoly> num, den;
  for (int d : fundamental_degrees(rs)) num.push_back(IntPoly::q_integer(d));
  for (const auto& t : sub_diagram_type(rs, fv.levi()))
    for (int d : fundamental_degrees(RootSystem(t))) den.push_back(IntPoly::q_integer(d));
  return eval_rational(num, den);
}

IntPoly poincare_poly(const FlagVariety& fv) {
  check(fv);
  using Key = std::pair<std::string, std::uint32_t>;
  static std::shared_mutex mutex;
  static std::map<Key, IntPoly> memo;
  const Key key{fv.ambient.split_label(), fv.circled.bits()};
  {
    std::shared_lock lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  RootSystem rs(fv.ambient);
  const BigInt cosets = weyl_order(rs) / parabolic_order(rs, fv.levi());
  IntPoly p = cosets > kEnumerationCap ? poincare_poly_by_degrees(fv) : enumerate(rs, fv.levi());
  std::unique_lock lock(mutex);
  memo.emplace(key, p);
  return p;
}

int dim_flag(const FlagVariety& fv) {
  check(fv);
  return longest_element_length(RootSystem(fv.ambient), fv.levi());
}

IntPoly conormed_poincare(const FlagVariety& fv) {
  check(fv);
  const bool outer_e6 = fv.ambient.series == Series::E && fv.ambient.rank == 6 &&
                        fv.ambient.outer_twist == 2;
  auto tm1 = [](int n) { return IntPoly::monomial(n) - IntPoly{1}; };  // t^n - 1
  auto tp1 = [](int n) { return IntPoly::monomial(n) + IntPoly{1}; };  // t^n + 1
  if (outer_e6 && fv.circled == NodeSet{2}) {
    const IntPoly num[] = {tm1(8), tm1(12), tp1(9)};
    const IntPoly den[] = {tm1(1), tm1(4), tp1(3)};
    return eval_rational(num, den);
  }
  if (outer_e6 && fv.circled == NodeSet{1, 6}) {
    const IntPoly num[] = {tm1(8), tm1(12), tp1(5), tp1(9)};
    const IntPoly den[] = {tm1(1), tp1(1), tm1(4), tp1(4)};
    return eval_rational(num, den);
  }
  throw NotSpecifiedBySource("conormed Poincaré polynomial of " + fv.label());
}

}  // namespace lieflag
