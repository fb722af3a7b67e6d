#include "lieflag/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace lieflag {

WeylElement::WeylElement(std::vector<RootIndex> images, const RootSystem& rs)
    : images_(std::move(images)) {
  refresh(rs);
}

void WeylElement::refresh(const RootSystem& rs) {
  length_ = 0;
  for (RootIndex r : images_) length_ += rs.is_positive(r) ? 0 : 1;
  key_ = 0;
  for (int i = rs.rank() - 1; i >= 0; --i) key_ = (key_ << 8) | images_[i];
}

WeylElement WeylElement::identity(const RootSystem& rs) {
  std::vector<RootIndex> img(rs.num_positive());
  std::iota(img.begin(), img.end(), RootIndex{0});
  return WeylElement(std::move(img), rs);
}

WeylElement WeylElement::left_multiply(const RootSystem& rs, int node) const {
  auto table = rs.reflection_table(node);
  std::vector<RootIndex> img(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) img[k] = table[images_[k]];
  return WeylElement(std::move(img), rs);
}

WeylElement WeylElement::right_multiply(const RootSystem& rs, int node) const {
  auto table = rs.reflection_table(node);
  std::vector<RootIndex> img(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) img[k] = image(rs, table[k]);
  return WeylElement(std::move(img), rs);
}

WeylElement WeylElement::compose(const RootSystem& rs, const WeylElement& other) const {
  std::vector<RootIndex> img(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) img[k] = image(rs, other.images_[k]);
  return WeylElement(std::move(img), rs);
}

WeylElement WeylElement::inverse(const RootSystem& rs) const {
  std::vector<RootIndex> img(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) {
    auto kk = static_cast<RootIndex>(k);
    RootIndex r = images_[k];
    if (rs.is_positive(r))
      img[r] = kk;
    else
      img[rs.negate(r)] = rs.negate(kk);
  }
  return WeylElement(std::move(img), rs);
}

bool WeylElement::has_left_descent(const RootSystem& rs, int node) const {
  const RootIndex target = rs.negate(rs.simple_root(node));
  return std::find(images_.begin(), images_.end(), target) != images_.end();
}

std::vector<int> WeylElement::reduced_word(const RootSystem& rs) const {
  std::vector<int> word;
  WeylElement w = *this;
  while (w.length() > 0) {
    for (int i = 1; i <= rs.rank(); ++i) {
      if (w.has_left_descent(rs, i)) {
        word.push_back(i);
        w = w.left_multiply(rs, i);
        break;
      }
    }
  }
  return word;
}

WeylElement WeylElement::conjugate_by_diagram(const RootSystem& rs,
                                              std::span<const RootIndex> sigma) const {
  std::vector<RootIndex> img(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) img[sigma[k]] = sigma[images_[k]];
  return WeylElement(std::move(img), rs);
}

std::vector<int> fundamental_degrees(const RootSystem& rs) {
  std::map<int, int> per_height;
  for (int k = 0; k < rs.num_positive(); ++k) ++per_height[rs.height(static_cast<RootIndex>(k))];
  const int top = per_height.empty() ? 0 : per_height.rbegin()->first;
  std::vector<int> degrees;
  for (int h = 1; h <= top; ++h) {
    int mult = per_height[h] - (per_height.count(h + 1) ? per_height[h + 1] : 0);
    for (int m = 0; m < mult; ++m) degrees.push_back(h + 1);
  }
  if (static_cast<int>(degrees.size()) != rs.rank())
    throw Error("height partition does not have rank-many parts for " + rs.type().label());
  return degrees;
}

BigInt weyl_order(const RootSystem& rs) {
  BigInt order = 1;
  for (int d : fundamental_degrees(rs)) order *= d;
  return order;
}

BigInt weyl_order(const CartanType& type) { return weyl_order(RootSystem(type)); }

BigInt parabolic_order(const RootSystem& rs, NodeSet nodes) {
  BigInt order = 1;
  for (const auto& t : sub_diagram_type(rs, nodes)) order *= weyl_order(t);
  return order;
}

void for_each_min_coset_rep(const RootSystem& rs, NodeSet parabolic,
                            const std::function<void(const WeylElement&)>& visit,
                            std::optional<NodeSet> generators) {
  const NodeSet all = NodeSet::all(rs.rank());
  const NodeSet gens = generators.value_or(all);
  if (!parabolic.subset_of(all) || !gens.subset_of(all))
    throw InvalidArgument("node set exceeds the rank of " + rs.type().label());
  const std::vector<int> gen_nodes = gens.nodes();
  const std::vector<int> par_nodes = (parabolic & gens).nodes();

  std::vector<WeylElement> layer{WeylElement::identity(rs)};
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    std::unordered_map<std::uint64_t, WeylElement> next;
    for (const WeylElement& w : layer) {
      visit(w);
      for (int i : gen_nodes) {
        if (w.has_left_descent(rs, i)) continue;
        WeylElement v = w.left_multiply(rs, i);
        if (next.count(v.key())) continue;
        bool minimal = std::none_of(par_nodes.begin(), par_nodes.end(),
                                    [&](int j) { return v.has_right_descent(rs, j); });
        if (minimal) next.emplace(v.key(), std::move(v));
      }
    }
    layer.clear();
    layer.reserve(next.size());
    for (auto& [k, v] : next) layer.push_back(std::move(v));
  }
}

std::vector<CosetRep> minimal_coset_reps(const RootSystem& rs, NodeSet parabolic) {
  std::vector<CosetRep> out;
  for_each_min_coset_rep(rs, parabolic,
                         [&](const WeylElement& w) { out.push_back({w, parabolic}); });
  return out;
}

std::vector<std::uint64_t> coset_length_counts(const RootSystem& rs, NodeSet parabolic,
                                               std::optional<NodeSet> generators) {
  std::vector<std::uint64_t> counts;
  for_each_min_coset_rep(
      rs, parabolic,
      [&](const WeylElement& w) {
        if (static_cast<int>(counts.size()) <= w.length()) counts.resize(w.length() + 1, 0);
        ++counts[w.length()];
      },
      generators);
  return counts;
}

BigInt weyl_order_by_enumeration(const RootSystem& rs) {
  BigInt order = 1;
  NodeSet below;
  for (int node = 1; node <= rs.rank(); ++node) {
    NodeSet above = below;
    above.insert(node);
    auto counts = coset_length_counts(rs, below, above);
    order *= std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    below = above;
  }
  return order;
}

std::uint64_t enumerate_full_group(const RootSystem& rs) {
  if (rs.rank() > 7)
    throw InvalidArgument("full enumeration of W(" + rs.type().label() + ") is not allowed above rank 7");
  auto counts = coset_length_counts(rs, NodeSet{});
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

WeylElement project_to_min_rep(const RootSystem& rs, WeylElement w, NodeSet parabolic) {
  const std::vector<int> nodes = parabolic.nodes();
  for (bool moved = true; moved;) {
    moved = false;
    for (int j : nodes) {
      if (w.has_right_descent(rs, j)) {
        w = w.right_multiply(rs, j);
        moved = true;
      }
    }
  }
  return w;
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // The smaller index stays the root, so roots are the (length, key)-minimal members.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

}  // namespace

std::vector<DoubleCosetCell> double_cosets(const RootSystem& rs, NodeSet left, NodeSet right,
                                           const std::optional<DiagramAut>& star) {
  const NodeSet all = NodeSet::all(rs.rank());
  if (!left.subset_of(all) || !right.subset_of(all))
    throw InvalidArgument("node set exceeds the rank of " + rs.type().label());
  std::vector<RootIndex> sigma;
  if (star) {
    if (!rs.preserves(*star))
      throw InvalidArgument(star->to_string() + " is not a diagram automorphism of " + rs.type().label());
    if (star->apply(left) != left || star->apply(right) != right)
      throw InvalidArgument("star action " + star->to_string() + " does not stabilise {" +
                            left.to_string() + "} and {" + right.to_string() + "}");
    sigma = rs.diagram_action(*star);
  }

  std::vector<WeylElement> reps;
  for_each_min_coset_rep(rs, right, [&](const WeylElement& w) { reps.push_back(w); });
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t k = 0; k < reps.size(); ++k) index.emplace(reps[k].key(), k);

  DisjointSets sets(reps.size());
  const std::vector<int> left_nodes = left.nodes();
  for (std::size_t k = 0; k < reps.size(); ++k)
    for (int i : left_nodes)
      sets.unite(k, index.at(project_to_min_rep(rs, reps[k].left_multiply(rs, i), right).key()));

  std::vector<DoubleCosetCell> cells;
  std::unordered_map<std::size_t, std::size_t> cell_of_root;
  for (std::size_t k = 0; k < reps.size(); ++k) {
    std::size_t root = sets.find(k);
    auto [it, fresh] = cell_of_root.emplace(root, cells.size());
    if (fresh) {
      DoubleCosetCell cell{reps[root], left, right, 0, true, {}};
      cells.push_back(std::move(cell));
    }
    ++cells[it->second].orbit_size;
  }

  for (auto& cell : cells) {
    WeylElement inv = cell.min_rep.inverse(rs);
    for (int i : left_nodes) {
      RootIndex r = inv.image(rs, rs.simple_root(i));
      if (r < rs.rank() && right.contains(r + 1)) cell.intersection_nodes.insert(i);
    }
    if (star) {
      WeylElement moved = project_to_min_rep(rs, cell.min_rep.conjugate_by_diagram(rs, sigma), right);
      cell.star_invariant =
          sets.find(index.at(moved.key())) == sets.find(index.at(cell.min_rep.key()));
    }
  }
  return cells;
}

int longest_element_length(const RootSystem& rs, NodeSet levi) {
  if (!levi.subset_of(NodeSet::all(rs.rank())))
    throw InvalidArgument("node set exceeds the rank of " + rs.type().label());
  return rs.num_positive() - rs.num_positive_in(levi);
}

}  // namespace lieflag
