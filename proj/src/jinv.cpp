#include "lieflag/jinv.hpp"

#include <algorithm>
#include "json.hpp"

#include "lieflag/data.hpp"

namespace lieflag {

JTable JTable::from_json(const nlohmann::json& doc) {
  JTable t;
  try {
    t.version_ = doc.at("version").get<std::string>();
    if (doc.at("prime").get<int>() != 2) throw InvalidArgument("only p = 2 tables are supported");
    t.omitted_ = doc.value("omitted", std::vector<std::string>{});
    for (const auto& g : doc.at("groups")) {
      JGroup row;
      row.label = g.at("label").get<std::string>();
      row.display = g.value("display", row.label);
      row.aliases = g.value("aliases", std::vector<std::string>{});
      row.degrees = g.at("degrees").get<std::vector<int>>();
      row.caps = g.at("caps").get<std::vector<int>>();
      row.chains = g.value("chains", std::vector<std::vector<int>>{});
      row.constraints_from_source = g.value("constraints_from_source", false);
      if (row.degrees.size() != row.caps.size())
        throw InvalidArgument("degree and cap lists differ in length for " + row.label);
      for (const auto& chain : row.chains)
        for (int idx : chain)
          if (idx < 0 || idx >= static_cast<int>(row.degrees.size()))
            throw InvalidArgument("chain index out of range for " + row.label);
      t.groups_.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed J-invariant table: ") + e.what());
  }
  return t;
}

const JTable& JTable::builtin() {
  static const JTable table = from_json(nlohmann::json::parse(detail::builtin_document("jinvariant")));
  return table;
}

const JGroup& JTable::group(std::string_view label) const {
  for (const auto& g : groups_) {
    if (g.label == label) return g;
    if (std::find(g.aliases.begin(), g.aliases.end(), label) != g.aliases.end()) return g;
  }
  if (std::find(omitted_.begin(), omitted_.end(), label) != omitted_.end())
    throw InvalidArgument("J-invariant of " + std::string(label) +
                          " is not tabulated (omitted group)");
  std::string known;
  for (const auto& g : groups_) known += (known.empty() ? "" : ", ") + g.label;
  throw InvalidArgument("unknown group '" + std::string(label) + "'; known: " + known);
}

JProfile max_profile(std::string_view group_label, const JTable& table) {
  const JGroup& g = table.group(group_label);
  return JProfile{g.label, 2, g.degrees, g.caps, g.caps};
}

bool is_admissible(const JProfile& p, const JTable& table) {
  if (p.prime != 2) return false;
  const JGroup* g = nullptr;
  try {
    g = &table.group(p.group_label);
  } catch (const InvalidArgument&) {
    return false;
  }
  if (p.degrees != g->degrees || p.caps != g->caps) return false;
  if (p.values.size() != p.degrees.size()) return false;
  for (std::size_t i = 0; i < p.values.size(); ++i)
    if (p.values[i] < 0 || p.values[i] > p.caps[i]) return false;
  for (const auto& chain : g->chains)
    for (std::size_t k = 1; k < chain.size(); ++k)
      if (p.values[chain[k - 1]] < p.values[chain[k]]) return false;
  return true;
}

JProfile make_profile(std::string_view group_label, std::vector<int> values, const JTable& table) {
  const JGroup& g = table.group(group_label);
  JProfile p{g.label, 2, g.degrees, g.caps, std::move(values)};
  if (!is_admissible(p, table)) {
    std::string v;
    for (int x : p.values) v += (v.empty() ? "" : ",") + std::to_string(x);
    throw InvalidArgument("J = (" + v + ") is not admissible for " + g.label);
  }
  return p;
}

IntPoly upper_motive_poly(const JProfile& profile, const JTable& table) {
  if (!is_admissible(profile, table))
    throw InvalidArgument("J-invariant profile is not admissible for " + profile.group_label);
  std::vector<IntPoly> num, den;
  for (int i = 0; i < profile.size(); ++i) {
    const int d = profile.degrees[i];
    const int top = d << profile.values[i];
    num.push_back(IntPoly::monomial(top) - IntPoly{1});
    den.push_back(IntPoly::monomial(d) - IntPoly{1});
  }
  return eval_rational(num, den);
}

AdmissibleSet enumerate_admissible(std::string_view group_label, const JTable& table) {
  const JGroup& g = table.group(group_label);
  AdmissibleSet out;
  out.unconstrained_by_source = !g.constraints_from_source;
  const int r = static_cast<int>(g.caps.size());
  std::vector<int> j(r, 0);
  // Odometer over the box 0 <= j_i <= k_i; last index varies fastest, which
  // gives lexicographic order.
  while (true) {
    JProfile p{g.label, 2, g.degrees, g.caps, j};
    if (is_admissible(p, table)) out.profiles.push_back(std::move(p));
    int i = r - 1;
    while (i >= 0 && j[i] == g.caps[i]) j[i--] = 0;
    if (i < 0) break;
    ++j[i];
  }
  return out;
}

}  // namespace lieflag
