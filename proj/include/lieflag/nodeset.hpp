#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace lieflag {

/// A set of Dynkin nodes in Bourbaki numbering (1-based, at most 31 nodes).
class NodeSet {
 public:
  constexpr NodeSet() = default;
  NodeSet(std::initializer_list<int> nodes);
  explicit NodeSet(const std::vector<int>& nodes);

  static constexpr NodeSet from_bits(std::uint32_t bits) {
    NodeSet s;
    s.bits_ = bits;
    return s;
  }
  static NodeSet all(int rank);
  /// Parses a comma list such as "1,3,4"; an empty string gives the empty set.
  static NodeSet parse(std::string_view csv);

  bool contains(int node) const {
    return node >= 1 && node <= 31 && ((bits_ >> (node - 1)) & 1U) != 0;
  }
  void insert(int node);
  void erase(int node);

  bool empty() const { return bits_ == 0; }
  int size() const;
  int max_node() const;
  std::uint32_t bits() const { return bits_; }
  std::vector<int> nodes() const;

  NodeSet complement(int rank) const;
  bool subset_of(NodeSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::string to_string() const;

  friend NodeSet operator&(NodeSet a, NodeSet b) { return from_bits(a.bits_ & b.bits_); }
  friend NodeSet operator|(NodeSet a, NodeSet b) { return from_bits(a.bits_ | b.bits_); }
  friend bool operator==(NodeSet, NodeSet) = default;
  friend auto operator<=>(NodeSet, NodeSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

}  // namespace lieflag
