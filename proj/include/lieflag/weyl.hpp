#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "lieflag/polyring.hpp"
#include "lieflag/rootsys.hpp"

namespace lieflag {

/// Weyl group element stored as its action on the positive roots (the
/// action on negative roots follows from w(-a) = -w(a)).
///
/// All operations take the RootSystem explicitly; the element does not keep
/// a reference to it.
class WeylElement {
 public:
  static WeylElement identity(const RootSystem& rs);

  int length() const { return length_; }

  RootIndex image(const RootSystem& rs, RootIndex r) const {
    return rs.is_positive(r) ? images_[r] : rs.negate(images_[rs.negate(r)]);
  }
  std::span<const RootIndex> positive_images() const { return images_; }

  /// s_node * w
  WeylElement left_multiply(const RootSystem& rs, int node) const;
  /// w * s_node
  WeylElement right_multiply(const RootSystem& rs, int node) const;
  /// (*this) * other
  WeylElement compose(const RootSystem& rs, const WeylElement& other) const;
  WeylElement inverse(const RootSystem& rs) const;

  /// l(w s_node) < l(w), i.e. w(alpha_node) < 0.
  bool has_right_descent(const RootSystem& rs, int node) const {
    return !rs.is_positive(images_[rs.simple_root(node)]);
  }
  /// l(s_node w) < l(w), i.e. w^-1(alpha_node) < 0.
  bool has_left_descent(const RootSystem& rs, int node) const;

  /// Reduced word read left to right (w = s_{w[0]} s_{w[1]} ...).
  std::vector<int> reduced_word(const RootSystem& rs) const;

  /// sigma w sigma^-1 for a diagram automorphism, given as its action on
  /// signed roots (RootSystem::diagram_action).
  WeylElement conjugate_by_diagram(const RootSystem& rs, std::span<const RootIndex> sigma) const;

  /// Images of the simple roots packed into one word; determines w.
  std::uint64_t key() const { return key_; }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.key_ == b.key_; }
  /// Deterministic order: by length, then by key.
  friend std::strong_ordering operator<=>(const WeylElement& a, const WeylElement& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.key_ <=> b.key_;
  }

 private:
  WeylElement(std::vector<RootIndex> images, const RootSystem& rs);
  void refresh(const RootSystem& rs);

  std::vector<RootIndex> images_;
  int length_ = 0;
  std::uint64_t key_ = 0;
};

/// Minimal-length representative of the coset w W_J.
struct CosetRep {
  WeylElement element;
  NodeSet parabolic;
};

/// One double coset W_I w W_J.
struct DoubleCosetCell {
  WeylElement min_rep;
  NodeSet left_nodes;
  NodeSet right_nodes;
  /// Number of cosets w W_J inside the double coset.
  std::uint64_t orbit_size = 0;
  bool star_invariant = true;
  /// Nodes i in I with min_rep^-1(alpha_i) simple in J; W_I ∩ w W_J w^-1 is
  /// the parabolic subgroup on these nodes.
  NodeSet intersection_nodes;
};

/// |W| as the product of the fundamental degrees.
BigInt weyl_order(const RootSystem& rs);
BigInt weyl_order(const CartanType& type);
/// |W_J| for the parabolic subgroup on `nodes`.
BigInt parabolic_order(const RootSystem& rs, NodeSet nodes);

/// |W| as a product of coset counts along a chain of parabolic subgroups,
/// each count obtained by enumeration. Independent of the degree formula.
BigInt weyl_order_by_enumeration(const RootSystem& rs);

/// Counts every element of W by enumeration. Rejected above rank 7.
std::uint64_t enumerate_full_group(const RootSystem& rs);

/// Degrees d_1 <= ... <= d_rank from the height partition of the positive
/// roots (exponents are its conjugate partition).
std::vector<int> fundamental_degrees(const RootSystem& rs);

/// Calls `visit` once per minimal representative of W_S / W_J (S = the
/// generating nodes, all nodes by default) in order of (length, key).
/// Elements are produced one length layer at a time; W itself is never held.
void for_each_min_coset_rep(const RootSystem& rs, NodeSet parabolic,
                            const std::function<void(const WeylElement&)>& visit,
                            std::optional<NodeSet> generators = std::nullopt);

std::vector<CosetRep> minimal_coset_reps(const RootSystem& rs, NodeSet parabolic);

/// Number of minimal coset representatives of each length.
std::vector<std::uint64_t> coset_length_counts(const RootSystem& rs, NodeSet parabolic,
                                               std::optional<NodeSet> generators = std::nullopt);

/// The minimal representative of w W_J.
WeylElement project_to_min_rep(const RootSystem& rs, WeylElement w, NodeSet parabolic);

/// Partitions W / W_right into W_left-orbits. When `star` is given it must
/// stabilise both node sets; each cell then records whether the induced
/// action fixes it. Cells come in (length, key) order of their minimal
/// representatives.
std::vector<DoubleCosetCell> double_cosets(const RootSystem& rs, NodeSet left, NodeSet right,
                                           const std::optional<DiagramAut>& star = std::nullopt);

/// Length of the longest minimal representative of W / W_levi, i.e. the
/// number of positive roots outside the Levi root subsystem.
int longest_element_length(const RootSystem& rs, NodeSet levi);

}  // namespace lieflag
