#include "lieflag/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "lieflag/error.hpp"

namespace lieflag {

namespace {

bool admits_involution(Series s, int rank) {
  return (s == Series::A && rank >= 2) || s == Series::D || (s == Series::E && rank == 6);
}

void bond(std::vector<std::vector<int>>& c, int i, int j) {
  c[i - 1][j - 1] = -1;
  c[j - 1][i - 1] = -1;
}

int root_height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

}  // namespace

CartanType CartanType::parse(std::string_view label) {
  CartanType t;
  std::string_view s = label;
  if (!s.empty() && std::isdigit(static_cast<unsigned char>(s.front())) && s.size() > 1 &&
      std::isalpha(static_cast<unsigned char>(s[1]))) {
    t.outer_twist = s.front() - '0';
    s.remove_prefix(1);
  }
  if (s.empty()) throw InvalidArgument("empty Cartan type label");
  char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s.front())));
  if (std::string_view("ABCDEFG").find(c) == std::string_view::npos)
    throw InvalidArgument("unknown Dynkin series in '" + std::string(label) + "'");
  t.series = static_cast<Series>(c);
  s.remove_prefix(1);
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) {
        return std::isdigit(static_cast<unsigned char>(ch));
      }))
    throw InvalidArgument("missing rank in '" + std::string(label) + "'");
  t.rank = std::stoi(std::string(s));
  t.validate();
  return t;
}

void CartanType::validate() const {
  const std::string name = split_label();
  bool ok = false;
  switch (series) {
    case Series::A: ok = rank >= 1; break;
    case Series::B: ok = rank >= 2; break;
    case Series::C: ok = rank >= 2; break;
    case Series::D: ok = rank >= 4; break;
    case Series::E: ok = rank >= 6 && rank <= 8; break;
    case Series::F: ok = rank == 4; break;
    case Series::G: ok = rank == 2; break;
  }
  if (!ok) throw InvalidArgument("invalid Dynkin type " + name);
  if (rank > 8) throw InvalidArgument("rank above 8 is not supported: " + name);
  if (outer_twist != 1 && outer_twist != 2)
    throw InvalidArgument("twist label must be 1 or 2, got " + std::to_string(outer_twist));
  if (outer_twist == 2 && !admits_involution(series, rank))
    throw InvalidArgument(name + " has no diagram involution");
}

std::string CartanType::split_label() const {
  return std::string(1, static_cast<char>(series)) + std::to_string(rank);
}

std::string CartanType::label() const {
  return outer_twist == 2 ? "2" + split_label() : split_label();
}

std::vector<std::vector<int>> cartan_matrix(const CartanType& type) {
  type.validate();
  const int n = type.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  switch (type.series) {
    case Series::A:
      for (int i = 1; i < n; ++i) bond(c, i, i + 1);
      break;
    case Series::B:
      for (int i = 1; i < n; ++i) bond(c, i, i + 1);
      c[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case Series::C:
      for (int i = 1; i < n; ++i) bond(c, i, i + 1);
      c[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case Series::D:
      for (int i = 1; i < n - 1; ++i) bond(c, i, i + 1);
      c[n - 2][n - 1] = c[n - 1][n - 2] = 0;
      bond(c, n - 2, n);
      break;
    case Series::E:
      bond(c, 1, 3);
      bond(c, 2, 4);
      for (int i = 3; i < n; ++i) bond(c, i, i + 1);
      break;
    case Series::F:
      bond(c, 1, 2);
      bond(c, 2, 3);
      bond(c, 3, 4);
      c[2][1] = -2;  // alpha_3 short
      break;
    case Series::G:
      c[0][1] = -3;  // alpha_1 short
      c[1][0] = -1;
      break;
  }
  return c;
}

RootSystem::RootSystem(CartanType type) : type_(type), cartan_(cartan_matrix(type)) {
  const int n = type_.rank;
  auto reflect_coords = [&](int i, const Root& b) {
    Root out = b;
    int pairing = 0;
    for (int j = 0; j < n; ++j) pairing += cartan_[i][j] * b[j];
    out[i] -= pairing;
    return out;
  };

  std::set<Root> seen;
  std::deque<Root> queue;
  for (int i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    seen.insert(r);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    Root b = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Root g = reflect_coords(i, b);
      if (seen.insert(g).second) queue.push_back(std::move(g));
    }
  }
  for (const Root& r : seen)
    if (std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; })) positive_.push_back(r);
  std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    int ha = root_height(a), hb = root_height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  if (2 * positive_.size() != seen.size())
    throw Error("root closure is not symmetric for " + type_.label());
  if (2 * positive_.size() > 256) throw Error("root system too large for 8-bit root indices");

  std::map<Root, RootIndex> index;
  const int np = num_positive();
  for (int k = 0; k < np; ++k) {
    index[positive_[k]] = static_cast<RootIndex>(k);
    Root neg = positive_[k];
    for (int& x : neg) x = -x;
    index[neg] = static_cast<RootIndex>(k + np);
  }
  reflection_.assign(n, std::vector<RootIndex>(2 * np));
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < 2 * np; ++r)
      reflection_[i][r] = index.at(reflect_coords(i, coordinates(static_cast<RootIndex>(r))));
}

Root RootSystem::coordinates(RootIndex r) const {
  if (is_positive(r)) return positive_[r];
  Root out = positive_[r - num_positive()];
  for (int& x : out) x = -x;
  return out;
}

int RootSystem::height(RootIndex r) const { return root_height(coordinates(r)); }

std::optional<RootIndex> RootSystem::find(const Root& coords) const {
  if (static_cast<int>(coords.size()) != rank()) return std::nullopt;
  bool negative = std::any_of(coords.begin(), coords.end(), [](int x) { return x < 0; });
  Root probe = coords;
  if (negative)
    for (int& x : probe) x = -x;
  auto it = std::find(positive_.begin(), positive_.end(), probe);
  if (it == positive_.end()) return std::nullopt;
  auto k = static_cast<RootIndex>(it - positive_.begin());
  return negative ? negate(k) : k;
}

bool RootSystem::preserves(const DiagramAut& sigma) const {
  if (sigma.rank() != rank()) return false;
  std::vector<bool> hit(rank(), false);
  for (int i = 1; i <= rank(); ++i) {
    int s = sigma(i);
    if (s < 1 || s > rank() || hit[s - 1]) return false;
    hit[s - 1] = true;
  }
  for (int i = 1; i <= rank(); ++i)
    for (int j = 1; j <= rank(); ++j)
      if (cartan_[sigma(i) - 1][sigma(j) - 1] != cartan_[i - 1][j - 1]) return false;
  return true;
}

std::vector<RootIndex> RootSystem::diagram_action(const DiagramAut& sigma) const {
  if (!preserves(sigma)) throw InvalidArgument("permutation " + sigma.to_string() + " is not a diagram automorphism of " + type_.label());
  std::vector<RootIndex> out(num_roots());
  for (int r = 0; r < num_roots(); ++r) {
    Root c = coordinates(static_cast<RootIndex>(r));
    Root img(rank(), 0);
    for (int i = 1; i <= rank(); ++i) img[sigma(i) - 1] = c[i - 1];
    out[r] = *find(img);
  }
  return out;
}

int RootSystem::num_positive_in(NodeSet nodes) const {
  int count = 0;
  for (const Root& r : positive_) {
    bool inside = true;
    for (int i = 0; i < rank() && inside; ++i)
      if (r[i] != 0 && !nodes.contains(i + 1)) inside = false;
    count += inside ? 1 : 0;
  }
  return count;
}

DiagramAut DiagramAut::identity(int rank) {
  DiagramAut d;
  d.image.resize(rank);
  std::iota(d.image.begin(), d.image.end(), 1);
  return d;
}

DiagramAut DiagramAut::from_swaps(int rank, std::initializer_list<std::pair<int, int>> swaps) {
  DiagramAut d = identity(rank);
  for (auto [a, b] : swaps) {
    if (a < 1 || b < 1 || a > rank || b > rank) throw InvalidArgument("swap outside the diagram");
    std::swap(d.image[a - 1], d.image[b - 1]);
  }
  return d;
}

NodeSet DiagramAut::apply(NodeSet nodes) const {
  NodeSet out;
  for (int n : nodes.nodes()) out.insert((*this)(n));
  return out;
}

DiagramAut DiagramAut::compose(const DiagramAut& inner) const {
  DiagramAut d = identity(rank());
  for (int i = 1; i <= rank(); ++i) d.image[i - 1] = (*this)(inner(i));
  return d;
}

bool DiagramAut::is_identity() const { return *this == identity(rank()); }

std::string DiagramAut::to_string() const {
  std::string s;
  std::vector<bool> done(image.size(), false);
  for (int i = 1; i <= rank(); ++i) {
    if (done[i - 1] || (*this)(i) == i) continue;
    s += "(";
    int j = i;
    bool first = true;
    while (!done[j - 1]) {
      done[j - 1] = true;
      if (!first) s += " ";
      s += std::to_string(j);
      first = false;
      j = (*this)(j);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

DiagramAut opposition_involution(const RootSystem& rs) {
  const int total = rs.num_roots();
  std::vector<RootIndex> w(total);
  std::iota(w.begin(), w.end(), RootIndex{0});
  // Climb by right ascents until none is left; the result is w0.
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 1; i <= rs.rank(); ++i) {
      if (!rs.is_positive(w[rs.simple_root(i)])) continue;
      std::vector<RootIndex> next(total);
      for (int r = 0; r < total; ++r) next[r] = w[rs.reflect(i, static_cast<RootIndex>(r))];
      w = std::move(next);
      moved = true;
    }
  }
  DiagramAut d = DiagramAut::identity(rs.rank());
  for (int i = 1; i <= rs.rank(); ++i) {
    RootIndex img = rs.negate(w[rs.simple_root(i)]);
    if (img >= rs.rank()) throw Error("-w0 does not permute simple roots");
    d.image[i - 1] = img + 1;
  }
  return d;
}

std::vector<std::pair<CartanType, NodeSet>> sub_diagram_components(const RootSystem& rs,
                                                                   NodeSet nodes) {
  if (nodes.max_node() > rs.rank()) throw InvalidArgument("node set exceeds the rank");
  const auto& c = rs.cartan();
  auto linked = [&](int i, int j) { return i != j && c[i - 1][j - 1] != 0; };

  std::vector<std::pair<CartanType, NodeSet>> out;
  NodeSet left = nodes;
  while (!left.empty()) {
    NodeSet comp;
    std::vector<int> stack{left.nodes().front()};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (comp.contains(v)) continue;
      comp.insert(v);
      for (int u : nodes.nodes())
        if (!comp.contains(u) && linked(u, v)) stack.push_back(u);
    }
    left = NodeSet::from_bits(left.bits() & ~comp.bits());

    const std::vector<int> vs = comp.nodes();
    const int n = static_cast<int>(vs.size());
    auto degree = [&](int v) {
      int d = 0;
      for (int u : vs) d += linked(u, v) ? 1 : 0;
      return d;
    };
    CartanType t;
    t.rank = n;
    int laced = 1, mi = 0, mj = 0;
    for (int a : vs)
      for (int b : vs)
        if (a < b && linked(a, b) && c[a - 1][b - 1] * c[b - 1][a - 1] > laced) {
          laced = c[a - 1][b - 1] * c[b - 1][a - 1];
          mi = a;
          mj = b;
        }
    if (laced == 3) {
      t.series = Series::G;
    } else if (laced == 2) {
      if (n == 4 && degree(mi) == 2 && degree(mj) == 2) {
        t.series = Series::F;
      } else {
        int end = (degree(mj) == 1) ? mj : mi;
        int other = end == mi ? mj : mi;
        bool end_short = c[end - 1][other - 1] == -2;
        t.series = end_short ? Series::B : Series::C;
      }
    } else {
      int branch = 0;
      for (int v : vs)
        if (degree(v) >= 3) branch = v;
      if (branch == 0) {
        t.series = Series::A;
      } else {
        std::vector<int> arms;
        for (int u : vs) {
          if (!linked(u, branch)) continue;
          int len = 0, prev = branch, cur = u;
          while (cur != 0) {
            ++len;
            int next = 0;
            for (int w : vs)
              if (w != prev && linked(w, cur)) next = w;
            prev = cur;
            cur = next;
          }
          arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        t.series = (arms[0] == 1 && arms[1] == 1) ? Series::D : Series::E;
      }
    }
    t.validate();
    out.emplace_back(t, comp);
  }
  return out;
}

std::vector<CartanType> sub_diagram_type(const RootSystem& rs, NodeSet nodes) {
  std::vector<CartanType> out;
  for (auto& [t, comp] : sub_diagram_components(rs, nodes)) out.push_back(t);
  return out;
}

}  // namespace lieflag
