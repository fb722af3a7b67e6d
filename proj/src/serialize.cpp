#include "lieflag/serialize.hpp"

#include "lieflag/error.hpp"

namespace lieflag {

using nlohmann::json;

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    try {
      return BigInt(s);
    } catch (const std::exception&) {
      throw InvalidArgument("not an integer: '" + s + "'");
    }
  }
  throw InvalidArgument("expected an integer or decimal string, got " + j.dump());
}

json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

json poly_to_json(const IntPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.str());
  return {{"coeffs", coeffs}};
}

IntPoly poly_from_json(const json& j) {
  const json& arr = j.is_object() ? j.at("coeffs") : j;
  if (!arr.is_array()) throw InvalidArgument("polynomial must be {\"coeffs\": [...]}");
  std::vector<BigInt> c;
  for (const auto& e : arr) c.push_back(bigint_from_json(e));
  return IntPoly(std::move(c));
}

json root_system_to_json(const RootSystem& rs) {
  json roots = json::array();
  for (const auto& r : rs.positive_roots()) roots.push_back(r);
  return {{"type", rs.type().label()},
          {"rank", rs.rank()},
          {"cartan", rs.cartan()},
          {"num_positive_roots", rs.num_positive()},
          {"positive_roots", roots}};
}

json cells_to_json(const RootSystem& rs, const std::vector<DoubleCosetCell>& cells) {
  json out = json::array();
  for (const auto& c : cells)
    out.push_back({{"length", c.min_rep.length()},
                   {"reduced_word", c.min_rep.reduced_word(rs)},
                   {"orbit_size", c.orbit_size},
                   {"star_invariant", c.star_invariant},
                   {"intersection_nodes", c.intersection_nodes.nodes()}});
  return {{"cells", out}};
}

json coset_reps_to_json(const RootSystem& rs, const std::vector<CosetRep>& reps) {
  json out = json::array();
  for (const auto& r : reps)
    out.push_back({{"length", r.element.length()}, {"reduced_word", r.element.reduced_word(rs)}});
  return {{"cosets", out}};
}

json profile_to_json(const JProfile& p) {
  return {{"group", p.group_label}, {"prime", p.prime}, {"degrees", p.degrees},
          {"caps", p.caps},         {"values", p.values}};
}

json form_to_json(const DiagFormR& f) {
  return {{"dim", f.dim()},
          {"positive", f.positive()},
          {"negative", f.negative()},
          {"signature", f.signature()},
          {"witt_index", f.witt_index()}};
}

json witness_to_json(const std::vector<WitnessTerm>& w, const std::vector<IntPoly>& blocks) {
  json out = json::array();
  for (const auto& t : w)
    out.push_back({{"block", poly_to_json(blocks.at(t.block))},
                   {"shift", t.shift},
                   {"multiplicity", t.multiplicity}});
  return out;
}

json to_json(const MagicCell& c) {
  return {{"row", c.row_label},
          {"col", c.col_label},
          {"group", c.group_type},
          {"invariant_degree", c.invariant_degree}};
}

json to_json(const GroupConditionRow& r) {
  json j = {{"group", r.group},
            {"degree", r.degree},
            {"condition", r.condition},
            {"equivalent_condition", r.equivalent_condition}};
  j["j_condition"] = r.j_condition
                         ? json{{"degrees", r.j_condition->degrees}, {"values", r.j_condition->values}}
                         : json(nullptr);
  j["parabolic"] = r.parabolic ? json(r.parabolic->nodes()) : json("any");
  return j;
}

json to_json(const TitsIndexCase& c) {
  return {{"rost_condition", to_string(c.rost_condition)},
          {"text", c.text},
          {"index", c.index},
          {"circled", c.circled.nodes()},
          {"kernel_type", c.kernel_type},
          {"possible", c.possible}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace lieflag
