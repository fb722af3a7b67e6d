#include "lieflag/nodeset.hpp"

#include <bit>
#include <charconv>

#include "lieflag/error.hpp"

namespace lieflag {

NodeSet::NodeSet(std::initializer_list<int> nodes) {
  for (int n : nodes) insert(n);
}

NodeSet::NodeSet(const std::vector<int>& nodes) {
  for (int n : nodes) insert(n);
}

NodeSet NodeSet::all(int rank) {
  if (rank < 0 || rank > 31) throw InvalidArgument("rank out of range for a node set");
  return from_bits(rank == 0 ? 0U : (~0U >> (32 - rank)));
}

NodeSet NodeSet::parse(std::string_view csv) {
  NodeSet out;
  while (!csv.empty()) {
    auto comma = csv.find(',');
    auto tok = csv.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty()) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw InvalidArgument("bad node index '" + std::string(tok) + "'");
      out.insert(v);
    }
    if (comma == std::string_view::npos) break;
    csv.remove_prefix(comma + 1);
  }
  return out;
}

void NodeSet::insert(int node) {
  if (node < 1 || node > 31) throw InvalidArgument("node index out of range: " + std::to_string(node));
  bits_ |= 1U << (node - 1);
}

void NodeSet::erase(int node) {
  if (node >= 1 && node <= 31) bits_ &= ~(1U << (node - 1));
}

int NodeSet::size() const { return std::popcount(bits_); }

int NodeSet::max_node() const { return 32 - std::countl_zero(bits_); }

std::vector<int> NodeSet::nodes() const {
  std::vector<int> out;
  for (int i = 1; i <= 31; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

NodeSet NodeSet::complement(int rank) const { return from_bits(all(rank).bits_ & ~bits_); }

std::string NodeSet::to_string() const {
  std::string s;
  for (int n : nodes()) {
    if (!s.empty()) s += ',';
    s += std::to_string(n);
  }
  return s;
}

}  // namespace lieflag
