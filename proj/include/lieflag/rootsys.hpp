#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lieflag/nodeset.hpp"

namespace lieflag {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Dynkin type such as E6 or the outer form 2E6. The twist label is
/// metadata only and never changes the root data.
struct CartanType {
  Series series = Series::A;
  int rank = 1;
  int outer_twist = 1;

  /// Accepts "E6", "2E6", "1D6", "A1" (leading digit is the twist label).
  static CartanType parse(std::string_view label);

  /// Throws InvalidArgument if (series, rank, twist) is not a Dynkin type
  /// supported here.
  void validate() const;

  /// "E6" or "2E6".
  std::string label() const;
  /// Same as label() without the twist prefix.
  std::string split_label() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Index into the signed root set: [0, N) are the positive roots in
/// canonical order, N + k is the negative of root k.
using RootIndex = std::uint8_t;
using Root = std::vector<int>;

/// Permutation of the Dynkin nodes preserving the Cartan matrix.
struct DiagramAut {
  /// image[i - 1] = sigma(i), Bourbaki numbering.
  std::vector<int> image;

  static DiagramAut identity(int rank);
  /// Builds from disjoint transpositions, e.g. {{1,6},{3,5}}.
  static DiagramAut from_swaps(int rank, std::initializer_list<std::pair<int, int>> swaps);

  int rank() const { return static_cast<int>(image.size()); }
  int operator()(int node) const { return image.at(node - 1); }
  NodeSet apply(NodeSet nodes) const;
  DiagramAut compose(const DiagramAut& inner) const;
  bool is_identity() const;
  /// Cycle notation, e.g. "(1 6)(3 5)"; "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const DiagramAut&, const DiagramAut&) = default;
};

/// Finite root system in simple-root coordinates. Immutable after
/// construction.
///
/// Positive roots are ordered by height, then by descending lexicographic
/// order of the coordinate vector, so simple root i sits at index i - 1.
/// The Cartan matrix follows cartan[i][j] = <alpha_i^vee, alpha_j>, so the
/// simple reflection s_i sends beta to beta - <alpha_i^vee, beta> alpha_i.
///
/// Bourbaki adjacency:
///   A_n: 1-2-...-n          B_n: 1-...-(n-1)=>n (alpha_n short)
///   C_n: 1-...-(n-1)<=n     D_n: 1-...-(n-2), (n-2)-(n-1), (n-2)-n
///   E_n: 1-3-4-...-n, 2-4   F_4: 1-2=>3-4       G_2: 1<=2 (alpha_1 short)
class RootSystem {
 public:
  explicit RootSystem(CartanType type);

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  int num_positive() const { return static_cast<int>(positive_.size()); }
  int num_roots() const { return 2 * num_positive(); }
  std::span<const Root> positive_roots() const { return positive_; }

  RootIndex simple_root(int node) const { return static_cast<RootIndex>(node - 1); }
  bool is_positive(RootIndex r) const { return r < num_positive(); }
  RootIndex negate(RootIndex r) const {
    return static_cast<RootIndex>(is_positive(r) ? r + num_positive() : r - num_positive());
  }
  /// s_node applied to a signed root.
  RootIndex reflect(int node, RootIndex r) const { return reflection_[node - 1][r]; }
  std::span<const RootIndex> reflection_table(int node) const { return reflection_[node - 1]; }

  /// Signed coordinates of a root.
  Root coordinates(RootIndex r) const;
  int height(RootIndex r) const;
  std::optional<RootIndex> find(const Root& coords) const;

  /// The permutation of the signed root set induced by a diagram automorphism.
  std::vector<RootIndex> diagram_action(const DiagramAut& sigma) const;

  /// True if sigma preserves the Cartan matrix.
  bool preserves(const DiagramAut& sigma) const;

  /// Number of positive roots supported on the given node set.
  int num_positive_in(NodeSet nodes) const;

 private:
  CartanType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> positive_;
  std::vector<std::vector<RootIndex>> reflection_;
};

/// Cartan matrix of a Dynkin type, rows and columns in Bourbaki order.
std::vector<std::vector<int>> cartan_matrix(const CartanType& type);

/// The node permutation induced by -w0; identity when w0 = -1.
DiagramAut opposition_involution(const RootSystem& rs);

/// Connected components of the sub-diagram on `nodes`, classified by type
/// and listed in order of their smallest node.
std::vector<CartanType> sub_diagram_type(const RootSystem& rs, NodeSet nodes);

/// Same as sub_diagram_type, also returning the node set of each component.
std::vector<std::pair<CartanType, NodeSet>> sub_diagram_components(const RootSystem& rs,
                                                                   NodeSet nodes);

}  // namespace lieflag
