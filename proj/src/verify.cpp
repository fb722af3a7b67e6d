#include "lieflag/verify.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "lieflag/cgmb.hpp"
#include "lieflag/data.hpp"
#include "lieflag/error.hpp"
#include "lieflag/jinv.hpp"
#include "lieflag/magictables.hpp"
#include "lieflag/poincare.hpp"
#include "lieflag/qform.hpp"
#include "lieflag/serialize.hpp"
#include "lieflag/weyl.hpp"

namespace lieflag {

namespace {

using Path = std::optional<std::filesystem::path>;

struct Outcome {
  std::string expected;
  std::string actual;
  bool pass;
};

struct CheckDef {
  std::string name;
  std::string reference;
  std::function<Outcome(const Path&)> run;
};

std::string join(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

FlagVariety flag(const char* type, NodeSet circled) { return {CartanType::parse(type), circled}; }

Outcome dims(const char* type, NodeSet circled, int want) {
  int got = dim_flag(flag(type, circled));
  return {std::to_string(want), std::to_string(got), got == want};
}

Outcome skeleton(NodeSet levi, std::vector<int> want) {
  RootSystem rs(CartanType::parse("E6"));
  auto got = tate_skeleton(rs, {3, 4, 5}, levi, DiagramAut::from_swaps(6, {{1, 6}, {3, 5}}));
  return {join(want), join(got), got == want};
}

Outcome conormed(NodeSet circled, int want_degree) {
  IntPoly p = conormed_poincare(flag("2E6", circled));
  IntPoly b{1, 0, 0, 1};
  bool ring = divides_ring(p, b).has_value();
  bool semi = divides_semiring(p, b).has_value();
  std::ostringstream actual;
  actual << "degree " << p.degree() << ", nonnegative " << p.has_nonnegative_coefficients()
         << ", ring " << ring << ", semiring " << semi;
  bool pass = p.degree() == want_degree && p.has_nonnegative_coefficients() && ring && !semi;
  return {"degree " + std::to_string(want_degree) + ", nonnegative 1, ring 1, semiring 0",
          actual.str(), pass};
}

Outcome decomposition_fixture(const Path& dir, const std::string& name) {
  auto fixtures = load_decomposition_fixtures(load_document("fixtures", dir));
  auto it = std::find_if(fixtures.begin(), fixtures.end(),
                         [&](const DecompositionFixture& f) { return f.name == name; });
  if (it == fixtures.end()) throw InvalidArgument("fixture '" + name + "' missing from fixtures data");
  auto out = evaluate_fixture(*it);
  if (it->expect == "exact")
    return {"residual 0", "residual " + out.check.residual.to_string(), out.pass};
  std::string actual = "residual " + out.check.residual.to_string() + "; ";
  if (out.witness) {
    actual += "witness";
    for (const auto& w : *out.witness)
      actual += " " + std::to_string(w.multiplicity) + "*t^" + std::to_string(w.shift) + "*(" +
                it->residual_blocks[w.block].to_string() + ")";
  } else {
    actual += "no witness";
  }
  return {"witness with shifts >= " + std::to_string(it->min_residual_shift), actual, out.pass};
}

Outcome jinv_poly(const Path& dir, const char* group, std::vector<int> values, IntPoly want) {
  JTable table = JTable::from_json(load_document("jinvariant", dir));
  IntPoly got = upper_motive_poly(make_profile(group, values, table), table);
  return {want.to_string(), got.to_string(), got == want};
}

Outcome jinv_roundtrip(const Path& dir) {
  JTable jt = JTable::from_json(load_document("jinvariant", dir));
  Tables tt = Tables::from_json(load_document("tables", dir));
  int rows = 0, ok = 0;
  for (const auto& row : tt.conditions()) {
    if (!row.j_condition) continue;
    ++rows;
    const auto& g = jt.group(row.group);
    JProfile p{g.label, 2, g.degrees, g.caps, row.j_condition->values};
    auto all = enumerate_admissible(g.label, jt).profiles;
    bool listed = std::find(all.begin(), all.end(), p) != all.end();
    if (row.j_condition->degrees == g.degrees && is_admissible(p, jt) && listed) ++ok;
  }
  // Every group's maximal profile is admissible and listed by the enumeration.
  int groups = 0, groups_ok = 0;
  for (const auto& g : jt.groups()) {
    ++groups;
    JProfile top = max_profile(g.label, jt);
    auto all = enumerate_admissible(g.label, jt).profiles;
    if (is_admissible(top, jt) && !all.empty() && all.back() == top) ++groups_ok;
  }
  return {std::to_string(rows) + " conditions, " + std::to_string(groups) + " groups",
          std::to_string(ok) + " conditions, " + std::to_string(groups_ok) + " groups",
          rows > 0 && ok == rows && groups_ok == groups};
}

std::vector<DiagFormR> killing_all() {
  std::vector<DiagFormR> out;
  for (int mask = 0; mask < 32; ++mask) {
    CompositionAlgebraR q{CompositionAlgebraR::Kind::Quaternion, bool(mask & 1)};
    CompositionAlgebraR o{CompositionAlgebraR::Kind::Octonion, bool(mask & 2)};
    std::array<int, 3> g{mask & 4 ? 1 : -1, mask & 8 ? 1 : -1, mask & 16 ? 1 : -1};
    out.push_back(af_killing_form_e7(q, o, g));
  }
  return out;
}

Outcome killing_dims() {
  auto forms = killing_all();
  int n = static_cast<int>(std::count_if(forms.begin(), forms.end(),
                                         [](const DiagFormR& f) { return f.dim() == 133; }));
  return {"32 of 32 with dim 133", std::to_string(n) + " of 32 with dim 133", n == 32};
}

Outcome killing_compact() {
  CompositionAlgebraR q{CompositionAlgebraR::Kind::Quaternion, true};
  CompositionAlgebraR o{CompositionAlgebraR::Kind::Octonion, true};
  auto f = af_killing_form_e7(q, o, {1, 1, 1});
  return {"signature -133, witt 0",
          "signature " + std::to_string(f.signature()) + ", witt " + std::to_string(f.witt_index()),
          f.signature() == -133 && f.witt_index() == 0};
}

Outcome killing_split() {
  CompositionAlgebraR q{CompositionAlgebraR::Kind::Quaternion, false};
  CompositionAlgebraR o{CompositionAlgebraR::Kind::Octonion, false};
  int worst = 133;
  for (int mask = 0; mask < 8; ++mask) {
    std::array<int, 3> g{mask & 1 ? 1 : -1, mask & 2 ? 1 : -1, mask & 4 ? 1 : -1};
    worst = std::min(worst, af_killing_form_e7(q, o, g).witt_index());
  }
  return {"witt > 0 for all gamma", "minimum witt " + std::to_string(worst), worst > 0};
}

// Flag varieties swept by the property checks: every circled set for rank
// <= 6 types plus a few E7/E8 maximal parabolics.
std::vector<FlagVariety> property_sweep() {
  std::vector<FlagVariety> out;
  for (const char* t : {"A1", "A2", "B3", "C3", "G2", "A4", "D4", "F4", "E6"}) {
    CartanType ct = CartanType::parse(t);
    for (std::uint32_t bits = 1; bits < (1u << ct.rank); ++bits)
      out.push_back({ct, NodeSet::from_bits(bits)});
  }
  for (int n : {1, 2, 7}) out.push_back({CartanType::parse("E7"), NodeSet{n}});
  for (int n : {1, 8}) out.push_back({CartanType::parse("E8"), NodeSet{n}});
  return out;
}

Outcome prop_palindromic() {
  auto sweep = property_sweep();
  int ok = 0;
  for (const auto& fv : sweep) {
    IntPoly p = poincare_poly(fv);
    if (is_palindromic(p) && p.degree() == dim_flag(fv)) ++ok;
  }
  int n = static_cast<int>(sweep.size());
  return {std::to_string(n) + " palindromic", std::to_string(ok) + " palindromic", ok == n};
}

Outcome prop_coset_count() {
  auto sweep = property_sweep();
  int ok = 0;
  for (const auto& fv : sweep) {
    RootSystem rs(fv.ambient);
    BigInt index = weyl_order(rs) / parabolic_order(rs, fv.levi());
    if (poincare_poly(fv).value_at_one() == index && poincare_poly(fv) == poincare_poly_by_degrees(fv))
      ++ok;
  }
  int n = static_cast<int>(sweep.size());
  return {std::to_string(n) + " agree", std::to_string(ok) + " agree", ok == n};
}

Outcome prop_orbit_sums() {
  struct Case {
    const char* type;
    NodeSet left, right;
  };
  const std::vector<Case> cases{{"E6", {3, 4, 5}, {1, 3, 4, 5, 6}}, {"E6", {3, 4, 5}, {2, 3, 4, 5}},
                                {"E6", {1, 2, 3, 4, 5, 6}, {1, 3, 4, 5, 6}}, {"D4", {1, 3}, {2, 4}},
                                {"B3", {1}, {2}},   {"F4", {1, 2}, {3, 4}},
                                {"E7", {1, 2, 3, 4, 5, 6}, {2, 3, 4, 5, 6, 7}}};
  int ok = 0;
  for (const auto& c : cases) {
    RootSystem rs(CartanType::parse(c.type));
    auto cells = double_cosets(rs, c.left, c.right);
    BigInt sum = 0;
    bool sizes = true;
    for (const auto& cell : cells) {
      sum += cell.orbit_size;
      sizes = sizes && BigInt(cell.orbit_size) == parabolic_order(rs, c.left) /
                                                       parabolic_order(rs, cell.intersection_nodes);
    }
    if (sizes && sum == weyl_order(rs) / parabolic_order(rs, c.right)) ++ok;
  }
  int n = static_cast<int>(cases.size());
  return {std::to_string(n) + " consistent", std::to_string(ok) + " consistent", ok == n};
}

Outcome prop_semiring_fuzz() {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> deg(0, 6), coef(0, 3), sgn(-2, 3);
  auto random_poly = [&](int d, bool nonneg) {
    std::vector<BigInt> c(d + 1);
    for (auto& x : c) x = nonneg ? coef(rng) : sgn(rng);
    c.back() = 1 + coef(rng);
    return IntPoly(std::move(c));
  };
  const int cases = 20000;
  int semiring = 0, violations = 0;
  for (int i = 0; i < cases; ++i) {
    IntPoly q = random_poly(deg(rng), true);
    // Half the cases are built as products so that divisibility is common.
    IntPoly p = (i % 2) ? q * random_poly(deg(rng), i % 4 == 1) : random_poly(deg(rng) + 3, true);
    if (!p.has_nonnegative_coefficients()) continue;
    auto s = divides_semiring(p, q);
    if (!s) continue;
    ++semiring;
    auto r = divides_ring(p, q);
    if (!r || *r != *s || *s * q != p) ++violations;
  }
  return {"0 violations in " + std::to_string(cases) + " cases",
          std::to_string(violations) + " violations (" + std::to_string(semiring) +
              " semiring-divisible)",
          violations == 0 && semiring > 0};
}

Outcome prop_eq1(const Path& dir) {
  JTable table = JTable::from_json(load_document("jinvariant", dir));
  int total = 0, ok = 0;
  for (const auto& g : table.groups()) {
    for (const auto& p : enumerate_admissible(g.label, table).profiles) {
      ++total;
      IntPoly u = upper_motive_poly(p, table);
      int degree = 0;
      BigInt value = 1;
      for (int i = 0; i < p.size(); ++i) {
        degree += p.degrees[i] * ((1 << p.values[i]) - 1);
        value *= BigInt(1) << p.values[i];
      }
      if (u.degree() == degree && u.value_at_one() == value && is_palindromic(u) &&
          u.has_nonnegative_coefficients())
        ++ok;
    }
  }
  return {std::to_string(total) + " profiles", std::to_string(ok) + " profiles",
          total > 0 && ok == total};
}

Outcome tables_magic(const Path& dir) {
  Tables t = Tables::from_json(load_document("tables", dir));
  const std::vector<std::vector<int>> grid{{2, 3, 4, 5}, {3, 3, 4, 5}, {4, 4, 4, 5}, {5, 5, 5, 5}};
  bool ok = t.magic_cells().size() == 16;
  for (const auto& c : t.magic_cells())
    ok = ok && c.invariant_degree == grid[static_cast<int>(c.row)][static_cast<int>(c.col)];
  return {"16 cells, degree grid", std::to_string(t.magic_cells().size()) + " cells", ok};
}

Outcome tables_binary_motive(const Path& dir) {
  // 2E6 row: degree 5 and 2^(5-1) - 1 = 15, the top twist of U(X) = 1 + t^15.
  Tables t = Tables::from_json(load_document("tables", dir));
  int degree = t.conditions_for("2E6").degree;
  int top = (1 << (degree - 1)) - 1;
  return {"15", std::to_string(top), top == 15};
}

Outcome tables_tits_index(const Path& dir) {
  Tables t = Tables::from_json(load_document("tables", dir));
  const auto& zero = t.tits_index_for_rost(RostCondition::Zero);
  const auto& imp = t.tits_index_for_rost(RostCondition::ImpossibleWithSplitTits);
  bool ok = zero.index == "quasi-split" && !imp.possible && t.tits_indices().size() == 5;
  return {"zero quasi-split, last impossible",
          "zero " + zero.index + ", last " + (imp.possible ? "possible" : "impossible"), ok};
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = [] {
    std::vector<CheckDef> d;
    auto add = [&](std::string name, std::string ref, std::function<Outcome(const Path&)> f) {
      d.push_back({std::move(name), std::move(ref), std::move(f)});
    };
    add("dims-x2", "dim X_2 for E6", [](const Path&) { return dims("E6", {2}, 21); });
    add("dims-x16", "dim X_{1,6} for E6", [](const Path&) { return dims("E6", {1, 6}, 24); });
    add("dims-y1", "dim Y_1 for E7", [](const Path&) { return dims("E7", {1}, 33); });
    add("cgmb-x2", "Tate summands of X_2 over the 3,4,5 kernel",
        [](const Path&) { return skeleton({1, 3, 4, 5, 6}, {0, 6, 15, 21}); });
    add("cgmb-x16", "Tate summands of X_{1,6} over the 3,4,5 kernel",
        [](const Path&) { return skeleton({2, 3, 4, 5}, {0, 9, 15, 24}); });
    add("conormed-x2", "conormed P_N(X_2) for 2E6, 1+t^3 divisibility",
        [](const Path&) { return conormed({2}, 21); });
    add("conormed-x16", "conormed P_N(X_{1,6}) for 2E6, 1+t^3 divisibility",
        [](const Path&) { return conormed({1, 6}, 24); });
    add("henke-y1", "decomposition of M(Y_1) for E7",
        [](const Path& p) { return decomposition_fixture(p, "henke-y1"); });
    add("decomp-projective-line", "cell decomposition of P^1",
        [](const Path& p) { return decomposition_fixture(p, "projective-line"); });
    add("residual-x2", "remaining summands of M(X_2)",
        [](const Path& p) { return decomposition_fixture(p, "x2-anisotropic"); });
    add("residual-x16", "remaining summands of M(X_{1,6})",
        [](const Path& p) { return decomposition_fixture(p, "x16-anisotropic"); });
    add("jinv-2e6", "upper Borel motive of 2E6, J = (1,0,0)",
        [](const Path& p) { return jinv_poly(p, "2E6", {1, 0, 0}, IntPoly{1, 0, 0, 1}); });
    add("jinv-e7", "upper Borel motive of E7, J = (0,1,1,1)", [](const Path& p) {
      return jinv_poly(p, "E7", {0, 1, 1, 1},
                       IntPoly{1, 0, 0, 1} * IntPoly::from_exponents({0, 5}) *
                           IntPoly::from_exponents({0, 9}));
    });
    add("jinv-table-roundtrip", "J-invariant table and group conditions pass the admissibility checker",
        [](const Path& p) { return jinv_roundtrip(p); });
    add("killing-e7-dims", "Killing form of the E7 construction, 32 sign patterns",
        [](const Path&) { return killing_dims(); });
    add("killing-e7-compact", "compact real form", [](const Path&) { return killing_compact(); });
    add("killing-e7-split", "split inputs are isotropic", [](const Path&) { return killing_split(); });
    add("tables-magic", "magic square invariant degrees", [](const Path& p) { return tables_magic(p); });
    add("tables-binary-motive", "2E6 binary motive top twist 2^(d-1)-1",
        [](const Path& p) { return tables_binary_motive(p); });
    add("tables-tits-index", "Tits indices versus Rost invariant",
        [](const Path& p) { return tables_tits_index(p); });
    add("property-palindromic", "property: Poincare duality of flag varieties",
        [](const Path&) { return prop_palindromic(); });
    add("property-coset-count", "property: P(1) = |W/W_J| and degree formula",
        [](const Path&) { return prop_coset_count(); });
    add("property-orbit-sums", "property: double coset orbit sizes",
        [](const Path&) { return prop_orbit_sums(); });
    add("property-semiring-fuzz", "property: semiring divisibility implies ring divisibility",
        [](const Path&) { return prop_semiring_fuzz(); });
    add("property-jinv-degree-value", "property: degree and value at 1 of upper motive polynomials",
        [](const Path& p) { return prop_eq1(p); });
    std::sort(d.begin(), d.end(), [](const CheckDef& a, const CheckDef& b) { return a.name < b.name; });
    return d;
  }();
  return defs;
}

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.pass; });
}

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const VerifyCheck& c) { return !c.pass; }));
}

std::vector<std::string> verify_check_names() {
  std::vector<std::string> names;
  for (const auto& d : registry()) names.push_back(d.name);
  return names;
}

VerifyReport run_verify(const std::optional<std::string>& filter,
                        const std::optional<std::filesystem::path>& fixtures_dir) {
  std::vector<const CheckDef*> selected;
  for (const auto& d : registry())
    if (!filter || fnmatch(filter->c_str(), d.name.c_str(), 0) == 0) selected.push_back(&d);
  if (selected.empty()) {
    std::string names;
    for (const auto& d : registry()) names += "\n  " + d.name;
    throw InvalidArgument("no check matches '" + filter.value_or("") + "'; available:" + names);
  }
  VerifyReport report;
  for (const auto* d : selected) {
    VerifyCheck c{d->name, d->reference, "", "", false, 0.0};
    auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = d->run(fixtures_dir);
      c.expected = std::move(o.expected);
      c.actual = std::move(o.actual);
      c.pass = o.pass;
    } catch (const std::exception& e) {
      c.actual = std::string("error: ") + e.what();
    }
    c.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report.checks.push_back(std::move(c));
  }
  return report;
}

nlohmann::json report_to_json(const VerifyReport& r, bool timings) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json j = {{"name", c.name},
                        {"reference", c.reference},
                        {"expected", c.expected},
                        {"actual", c.actual},
                        {"pass", c.pass}};
    if (timings) j["runtime_ms"] = c.runtime_ms;
    checks.push_back(std::move(j));
  }
  return {{"checks", checks}, {"passed", r.checks.size() - r.failures()}, {"failed", r.failures()}};
}

std::string report_to_text(const VerifyReport& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    out << (c.pass ? "✓ " : "✗ ") << c.name << "  " << c.actual;
    if (!c.pass) out << "  (expected " << c.expected << ")";
    out << "  [" << c.reference << "]\n";
  }
  out << r.checks.size() - r.failures() << "/" << r.checks.size() << " checks passed\n";
  return out.str();
}

std::string report_to_csv(const VerifyReport& r) {
  std::ostringstream out;
  out << "name,reference,expected,actual,pass,runtime_ms\n";
  for (const auto& c : r.checks)
    out << csv_field(c.name) << ',' << csv_field(c.reference) << ',' << csv_field(c.expected) << ','
        << csv_field(c.actual) << ',' << (c.pass ? "true" : "false") << ',' << c.runtime_ms << '\n';
  return out.str();
}

}  // namespace lieflag
