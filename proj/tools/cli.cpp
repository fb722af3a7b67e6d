#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lieflag/cgmb.hpp"
#include "lieflag/data.hpp"
#include "lieflag/error.hpp"
#include "lieflag/jinv.hpp"
#include "lieflag/magictables.hpp"
#include "lieflag/poincare.hpp"
#include "lieflag/qform.hpp"
#include "lieflag/serialize.hpp"
#include "lieflag/verify.hpp"
#include "lieflag/weyl.hpp"

namespace lieflag::cli {

namespace {

using nlohmann::json;

enum class Format { Default, Json, Text, Csv };

struct Globals {
  Format format = Format::Default;
  bool seed_independent = false;
  std::optional<std::filesystem::path> fixtures;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_ints(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: '" + csv + "'");
    }
  }
  return out;
}

/// "1,0,0,1" (coefficients from the constant term), "q:5" for [5]_t, or a
/// JSON polynomial.
IntPoly parse_poly(const std::string& text) {
  if (!text.empty() && (text.front() == '{' || text.front() == '[')) {
    try {
      return poly_from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw UsageError(std::string("bad polynomial JSON: ") + e.what());
    }
  }
  if (text.rfind("q:", 0) == 0) {
    auto n = parse_ints(text.substr(2));
    if (n.size() != 1 || n[0] < 1) throw UsageError("q-integer needs a positive n: '" + text + "'");
    return IntPoly::q_integer(n[0]);
  }
  std::vector<BigInt> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      c.emplace_back(item);
    } catch (const std::exception&) {
      throw UsageError("not a coefficient list: '" + text + "'");
    }
  }
  return IntPoly(std::move(c));
}

/// "opposition", "none", or swaps such as "1-6,3-5".
DiagramAut parse_star(const std::string& text, const RootSystem& rs) {
  if (text == "opposition") return opposition_involution(rs);
  DiagramAut d = DiagramAut::identity(rs.rank());
  if (text == "none" || text.empty()) return d;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos) throw UsageError("star swaps look like 1-6,3-5: '" + text + "'");
    int a = parse_ints(item.substr(0, dash)).at(0);
    int b = parse_ints(item.substr(dash + 1)).at(0);
    if (a < 1 || b < 1 || a > rs.rank() || b > rs.rank())
      throw UsageError("star swap outside the diagram: '" + item + "'");
    std::swap(d.image[a - 1], d.image[b - 1]);
  }
  return d;
}

int sign_of(const std::string& s) {
  if (s == "+" || s == "+1" || s == "1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw UsageError("gamma entries must be + or -: '" + s + "'");
}

bool definite_of(const std::string& s) {
  if (s == "definite" || s == "division") return true;
  if (s == "split") return false;
  throw UsageError("algebra must be 'definite' or 'split': '" + s + "'");
}

/// Per-command output: JSON always, text and csv where they make sense.
struct Result {
  json value;
  std::function<std::string()> text;
  std::function<std::string()> csv;  // empty: csv not offered
  int exit_code = kOk;
};

std::string poly_text(const IntPoly& p) { return p.to_string() + "\n"; }

void emit(const Result& r, Format format, Format fallback, std::ostream& out) {
  if (format == Format::Default) format = fallback;
  switch (format) {
    case Format::Text:
      out << (r.text ? r.text() : r.value.dump(2) + "\n");
      break;
    case Format::Csv:
      if (!r.csv) throw UsageError("csv output is only available for flat tables");
      out << r.csv();
      break;
    default:
      out << r.value.dump(2) << "\n";
  }
}

struct Options {
  std::string type;
  bool enumerate = false;
  std::string parabolic;
  std::string left, right, star;
  std::vector<std::string> num, den;
  std::string ptext, qtext;
  bool semiring = false;
  std::string variety;
  bool conormed = false;
  std::string group;
  std::string jvals;
  std::string ambient, kernel, target, skel_star;
  std::string fixture;
  std::string q = "definite", o = "definite", gamma = "+,+,+";
  std::string rost;
  std::string filter;
  bool no_timings = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flag varieties, Weyl group cosets and motivic decomposition bookkeeping", "lieflag"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the verb
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  Globals g;
  Options opt;
  // Short names for the option fields the callbacks read.
  auto& type = opt.type;
  auto& enumerate = opt.enumerate;
  auto& parabolic = opt.parabolic;
  auto& left = opt.left;
  auto& right = opt.right;
  auto& star = opt.star;
  auto& num = opt.num;
  auto& den = opt.den;
  auto& ptext = opt.ptext;
  auto& qtext = opt.qtext;
  auto& semiring = opt.semiring;
  auto& variety = opt.variety;
  auto& conormed = opt.conormed;
  auto& group = opt.group;
  auto& jvals = opt.jvals;
  auto& ambient = opt.ambient;
  auto& kernel = opt.kernel;
  auto& target = opt.target;
  auto& skel_star = opt.skel_star;
  auto& fixture = opt.fixture;
  auto& q = opt.q;
  auto& o = opt.o;
  auto& gamma = opt.gamma;
  auto& rost = opt.rost;
  auto& filter = opt.filter;
  auto& no_timings = opt.no_timings;
  std::string format_name;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_flag("--seed-independent", g.seed_independent,
               "Accepted for compatibility; every computation is deterministic");
  std::string fixtures_dir;
  app.add_option("--fixtures", fixtures_dir,
                 "Directory with tables.json, jinvariant.json, fixtures.json overriding the pinned data")
      ->check(CLI::ExistingDirectory);

  Result result;
  Format fallback = Format::Json;
  std::function<void()> action;
  auto bind = [&](CLI::App* cmd, std::function<void()> f) { cmd->callback([&, f] { action = f; }); };

  // weyl
  auto* weyl = app.add_subcommand("weyl", "Weyl groups, cosets and double cosets");
  weyl->require_subcommand(1);
  {
    auto* order = weyl->add_subcommand("order", "Order of the Weyl group");
    order->add_option("--type", type, "Cartan type, e.g. E7")->required();
    order->add_flag("--enumerate", enumerate, "Also count the group by parabolic chain enumeration");
    bind(order, [&] {
      RootSystem rs(CartanType::parse(type));
      BigInt n = weyl_order(rs);
      json j = {{"type", rs.type().label()},
                {"order", n.str()},
                {"degrees", fundamental_degrees(rs)},
                {"num_positive_roots", rs.num_positive()}};
      if (enumerate) j["order_by_enumeration"] = weyl_order_by_enumeration(rs).str();
      result.value = j;
      result.text = [j] { return j["order"].get<std::string>() + "\n"; };
    });

    auto* roots = weyl->add_subcommand("roots", "Cartan matrix and positive roots");
    roots->add_option("--type", type, "Cartan type")->required();
    bind(roots, [&] {
      RootSystem rs(CartanType::parse(type));
      result.value = root_system_to_json(rs);
    });

    auto* cosets = weyl->add_subcommand("cosets", "Minimal representatives of W / W_J");
    cosets->add_option("--type", type, "Cartan type")->required();
    cosets->add_option("--parabolic", parabolic, "Nodes J of the parabolic subgroup, e.g. 1,3,4,5,6");
    bind(cosets, [&] {
      RootSystem rs(CartanType::parse(type));
      auto reps = minimal_coset_reps(rs, NodeSet::parse(parabolic));
      json j = coset_reps_to_json(rs, reps);
      j["count"] = reps.size();
      result.value = j;
      result.text = [j] {
        std::string s;
        for (const auto& c : j["cosets"]) {
          s += std::to_string(c["length"].get<int>()) + "  ";
          for (int n : c["reduced_word"]) s += "s" + std::to_string(n);
          s += "\n";
        }
        return s;
      };
      result.csv = [j] {
        std::string s = "length,reduced_word\n";
        for (const auto& c : j["cosets"]) {
          std::string w;
          for (int n : c["reduced_word"]) w += (w.empty() ? "" : " ") + std::to_string(n);
          s += std::to_string(c["length"].get<int>()) + "," + w + "\n";
        }
        return s;
      };
    });

    auto* dc = weyl->add_subcommand("double-cosets", "Double cosets W_I \\ W / W_J");
    dc->add_option("--type", type, "Cartan type")->required();
    dc->add_option("--left", left, "Nodes I")->required();
    dc->add_option("--right", right, "Nodes J")->required();
    dc->add_option("--star", star, "Diagram automorphism: opposition, none, or swaps like 1-6,3-5");
    bind(dc, [&] {
      RootSystem rs(CartanType::parse(type));
      std::optional<DiagramAut> sigma;
      if (!star.empty()) sigma = parse_star(star, rs);
      auto cells = double_cosets(rs, NodeSet::parse(left), NodeSet::parse(right), sigma);
      json j = cells_to_json(rs, cells);
      result.value = j;
      result.csv = [j] {
        std::string s = "length,orbit_size,star_invariant\n";
        for (const auto& c : j["cells"])
          s += std::to_string(c["length"].get<int>()) + "," +
               std::to_string(c["orbit_size"].get<std::uint64_t>()) + "," +
               (c["star_invariant"].get<bool>() ? "true" : "false") + "\n";
        return s;
      };
      result.text = result.csv;
    });
  }

  // poly
  auto* poly = app.add_subcommand("poly", "Integer polynomial arithmetic");
  poly->require_subcommand(1);
  {
    auto* er = poly->add_subcommand("eval-rational",
                                    "Exact quotient of products of polynomials; fails if not in Z[t]");
    er->add_option("--num", num, "Numerator factor (coefficients 1,0,1 / q:N / JSON); repeatable")
        ->required();
    er->add_option("--den", den, "Denominator factor; repeatable");
    bind(er, [&] {
      std::vector<IntPoly> n, d;
      for (const auto& s : num) n.push_back(parse_poly(s));
      for (const auto& s : den) d.push_back(parse_poly(s));
      IntPoly p = eval_rational(n, d);
      result.value = poly_to_json(p);
      result.text = [p] { return poly_text(p); };
    });

    auto* dv = poly->add_subcommand("divides", "Does q divide p, in Z[t] or with nonnegative quotient");
    dv->add_option("--p", ptext, "Dividend")->required();
    dv->add_option("--q", qtext, "Divisor")->required();
    dv->add_flag("--semiring", semiring, "Require a quotient with nonnegative coefficients");
    bind(dv, [&] {
      IntPoly p = parse_poly(ptext), q = parse_poly(qtext);
      auto quotient = semiring ? divides_semiring(p, q) : divides_ring(p, q);
      json j = {{"divides", quotient.has_value()}, {"semiring", semiring}};
      j["quotient"] = quotient ? poly_to_json(*quotient) : json(nullptr);
      result.value = j;
      result.text = [quotient] {
        return quotient ? "yes, quotient " + quotient->to_string() + "\n" : std::string("no\n");
      };
    });
  }

  // poincare
  auto* pc = app.add_subcommand("poincare", "Poincare polynomial of a flag variety");
  pc->add_option("--type", type, "Ambient Cartan type, e.g. E6 or 2E6")->required();
  pc->add_option("--variety", variety, "Circled nodes, e.g. 1,6")->required();
  pc->add_flag("--conormed", conormed, "Conormed polynomial (outer type, known cases only)");
  bind(pc, [&] {
    FlagVariety fv{CartanType::parse(type), NodeSet::parse(variety)};
    if (conormed && fv.ambient.outer_twist != 2) fv.ambient.outer_twist = 2;
    IntPoly p = conormed ? conormed_poincare(fv) : poincare_poly(fv);
    json j = poly_to_json(p);
    j["variety"] = fv.label();
    j["dimension"] = dim_flag(fv);
    j["conormed"] = conormed;
    j["value_at_one"] = p.value_at_one().str();
    result.value = j;
    result.text = [p, d = dim_flag(fv)] {
      return p.to_string() + "\ndimension " + std::to_string(d) + "\n";
    };
  });

  // jinv
  auto* jinv = app.add_subcommand("jinv", "J-invariant profiles");
  jinv->require_subcommand(1);
  {
    auto* jp = jinv->add_subcommand("poly", "Poincare polynomial of the upper Borel motive");
    jp->add_option("--group", group, "Group label, e.g. 2E6")->required();
    jp->add_option("--j", jvals, "J-invariant values, e.g. 1,0,0")->required();
    bind(jp, [&] {
      JTable table = JTable::from_json(load_document("jinvariant", g.fixtures));
      JProfile prof = make_profile(group, parse_ints(jvals), table);
      IntPoly p = upper_motive_poly(prof, table);
      json j = poly_to_json(p);
      j["profile"] = profile_to_json(prof);
      result.value = j;
      result.text = [p] { return poly_text(p); };
    });

    auto* je = jinv->add_subcommand("enumerate", "All admissible J-invariants of a group");
    je->add_option("--group", group, "Group label")->required();
    bind(je, [&] {
      JTable table = JTable::from_json(load_document("jinvariant", g.fixtures));
      auto set = enumerate_admissible(group, table);
      json profiles = json::array();
      for (const auto& p : set.profiles) profiles.push_back(p.values);
      const auto& grp = table.group(group);
      result.value = {{"group", grp.label},
                      {"degrees", grp.degrees},
                      {"caps", grp.caps},
                      {"profiles", profiles},
                      {"count", set.profiles.size()},
                      {"unconstrained_by_source", set.unconstrained_by_source}};
      result.csv = [set] {
        std::string s = "values\n";
        for (const auto& p : set.profiles) {
          std::string v;
          for (int x : p.values) v += (v.empty() ? "" : " ") + std::to_string(x);
          s += v + "\n";
        }
        return s;
      };
    });
  }

  // cgmb
  auto* cgmb = app.add_subcommand("cgmb", "Motivic decomposition bookkeeping");
  cgmb->require_subcommand(1);
  {
    auto* sk = cgmb->add_subcommand("skeleton", "Shifts of the Tate summands from double cosets");
    sk->add_option("--ambient", ambient, "Ambient type, e.g. E6")->required();
    sk->add_option("--kernel", kernel, "Nodes of the anisotropic kernel, e.g. 3,4,5")->required();
    sk->add_option("--variety", target, "Circled nodes of the flag variety, e.g. 2")->required();
    sk->add_option("--star", skel_star, "Star action: opposition (default), none, or swaps like 1-6,3-5");
    bind(sk, [&] {
      CartanType ct = CartanType::parse(ambient);
      RootSystem rs(ct);
      DiagramAut sigma = parse_star(skel_star.empty() ? "opposition" : skel_star, rs);
      NodeSet levi = NodeSet::parse(target).complement(ct.rank);
      auto shifts = tate_skeleton(rs, NodeSet::parse(kernel), levi, sigma);
      result.value = {{"ambient", ct.label()},
                      {"kernel", NodeSet::parse(kernel).nodes()},
                      {"variety", NodeSet::parse(target).nodes()},
                      {"star", sigma.to_string()},
                      {"shifts", shifts}};
      result.text = [shifts] {
        std::string s;
        for (int x : shifts) s += (s.empty() ? "" : ",") + std::to_string(x);
        return "{" + s + "}\n";
      };
    });

    auto* ck = cgmb->add_subcommand("check", "Evaluates a pinned decomposition fixture");
    ck->add_option("--fixture", fixture, "Fixture name, e.g. henke-y1")->required();
    bind(ck, [&] {
      auto fixtures = load_decomposition_fixtures(load_document("fixtures", g.fixtures));
      auto it = std::find_if(fixtures.begin(), fixtures.end(),
                             [&](const DecompositionFixture& f) { return f.name == fixture; });
      if (it == fixtures.end()) {
        std::string names;
        for (const auto& f : fixtures) names += "\n  " + f.name;
        throw UsageError("unknown fixture '" + fixture + "'; available:" + names);
      }
      auto outcome = evaluate_fixture(*it);
      json j = {{"fixture", it->name},
                {"provenance", it->provenance},
                {"expect", it->expect},
                {"pass", outcome.pass},
                {"residual", poly_to_json(outcome.check.residual)}};
      if (outcome.witness) j["witness"] = witness_to_json(*outcome.witness, it->residual_blocks);
      result.value = j;
      result.exit_code = outcome.pass ? kOk : kVerificationFailure;
      result.text = [j] {
        return std::string(j["pass"].get<bool>() ? "✓ " : "✗ ") + j["fixture"].get<std::string>() +
               "\n";
      };
    });
  }

  // qform
  auto* qf = app.add_subcommand("qform", "Real quadratic forms");
  qf->require_subcommand(1);
  {
    auto* af = qf->add_subcommand("af-e7", "Killing form of the E7 built from Q, O and gamma");
    af->add_option("--q", q, "Quaternion algebra: definite or split");
    af->add_option("--o", o, "Octonion algebra: definite or split");
    af->add_option("--gamma", gamma, "Signs of gamma_1,gamma_2,gamma_3, e.g. +,-,+");
    bind(af, [&] {
      std::vector<std::string> parts;
      std::stringstream ss(gamma);
      std::string item;
      while (std::getline(ss, item, ',')) parts.push_back(item);
      if (parts.size() != 3) throw UsageError("gamma needs three signs");
      DiagFormR f = af_killing_form_e7({CompositionAlgebraR::Kind::Quaternion, definite_of(q)},
                                       {CompositionAlgebraR::Kind::Octonion, definite_of(o)},
                                       {sign_of(parts[0]), sign_of(parts[1]), sign_of(parts[2])});
      result.value = form_to_json(f);
      result.text = [f] {
        return f.to_string() + "  dim " + std::to_string(f.dim()) + ", signature " +
               std::to_string(f.signature()) + ", witt index " + std::to_string(f.witt_index()) +
               "\n";
      };
    });
  }

  // tables
  auto* tb = app.add_subcommand("tables", "Classification tables");
  tb->require_subcommand(1);
  {
    auto* mg = tb->add_subcommand("magic", "Magic square with invariant degrees");
    bind(mg, [&] {
      Tables t = Tables::from_json(load_document("tables", g.fixtures));
      json cells = json::array();
      for (const auto& c : t.magic_cells()) cells.push_back(to_json(c));
      result.value = {{"version", t.version()}, {"cells", cells}};
      result.csv = [cells] {
        std::string s = "row,col,group,invariant_degree\n";
        for (const auto& c : cells)
          s += csv_field(c["row"]) + "," + csv_field(c["col"]) + "," + csv_field(c["group"]) + "," +
               std::to_string(c["invariant_degree"].get<int>()) + "\n";
        return s;
      };
      result.text = result.csv;
    });

    auto* cd = tb->add_subcommand("conditions", "Conditions for a group");
    cd->add_option("--group", group, "Group label, e.g. 2E6")->required();
    bind(cd, [&] {
      Tables t = Tables::from_json(load_document("tables", g.fixtures));
      const auto& row = t.conditions_for(group);
      json j = to_json(row);
      json constructions = json::array();
      for (const auto& c : t.tits_constructions())
        if (c.group == row.group)
          constructions.push_back({{"construction", c.construction},
                                   {"inputs", c.inputs},
                                   {"source_text", c.source_text}});
      j["tits_constructions"] = constructions;
      result.value = j;
      result.text = [row] {
        return row.group + ": degree " + std::to_string(row.degree) + "; " + row.condition + "; " +
               row.equivalent_condition + "; parabolic " + row.parabolic_text() + "\n";
      };
    });

    auto* ti = tb->add_subcommand("tits-index", "Tits index of an isotropic 2E6 by Rost invariant");
    ti->add_option("--rost", rost, "zero, pure-symbol-divisible-by-k, symbol-not-divisible-by-k, "
                                   "not-pure-symbol, impossible-with-split-tits")
        ->required();
    bind(ti, [&] {
      Tables t = Tables::from_json(load_document("tables", g.fixtures));
      const auto& c = t.tits_index_for_rost(parse_rost_condition(rost));
      json j = to_json(c);
      j["verification_note"] = t.tits_index_note();
      result.value = j;
      result.text = [c] {
        return c.text + ": " + c.index + ", circled {" + c.circled.to_string() + "}, kernel " +
               c.kernel_type + (c.possible ? "" : " (impossible)") + "\n";
      };
    });
  }

  // verify
  auto* vf = app.add_subcommand("verify", "Runs the pinned checks");
  vf->add_option("filter", filter, "Glob over check names, e.g. 'dims-*'");
  vf->add_flag("--no-timings", no_timings, "Omit runtimes so that JSON output is byte-stable");
  vf->add_flag("--list", [&](std::int64_t) { filter = "\x01list"; }, "List check names");
  bind(vf, [&] {
    if (filter == "\x01list") {
      auto names = verify_check_names();
      result.value = names;
      result.text = [names] {
        std::string s;
        for (const auto& n : names) s += n + "\n";
        return s;
      };
      return;
    }
    std::optional<std::string> f;
    if (!filter.empty()) f = filter;
    VerifyReport report = run_verify(f, g.fixtures);
    result.value = report_to_json(report, !no_timings);
    result.text = [report] { return report_to_text(report); };
    result.csv = [report] { return report_to_csv(report); };
    result.exit_code = report.all_pass() ? kOk : kVerificationFailure;
    fallback = Format::Text;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "run 'lieflag --help' for usage\n";
    return kUsage;
  }

  if (format_name == "json") g.format = Format::Json;
  if (format_name == "text") g.format = Format::Text;
  if (format_name == "csv") g.format = Format::Csv;
  if (!fixtures_dir.empty()) g.fixtures = fixtures_dir;

  try {
    if (action) action();
    emit(result, g.format, fallback, out);
    return result.exit_code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace lieflag::cli
