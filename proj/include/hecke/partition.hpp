#pragma once

// Partitions, bipartitions and their Young-diagram combinatorics.
//
// A Partition stores its nonzero parts only; part(i) is 1-based and returns 0
// beyond the stored length. Text form: "-" for the empty partition, otherwise
// comma-separated weakly decreasing positive integers ("4,3,3,1"). A
// Bipartition is written "LAMBDA|MU" ("4,3,3,1|2,1", "-|3").

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

class Partition {
 public:
  Partition() = default;

  // Trailing zeros are dropped. Throws MonotonicityError on an increase and
  // InvalidArgument on a negative part.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }

  // 1-based; 0 for i > length().
  int part(int i) const noexcept {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  // Lexicographic on the part sequence; a proper prefix sorts first.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct Bipartition {
  Partition first;
  Partition second;

  int size() const noexcept { return first.size() + second.size(); }
  const Partition& component(int k) const { return k == 1 ? first : second; }

  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

struct Node {
  int row = 1;
  int col = 1;
  int component = 1;

  // Component, then row, then column.
  friend auto operator<=>(const Node& a, const Node& b) {
    if (auto c = a.component <=> b.component; c != 0) return c;
    if (auto c = a.row <=> b.row; c != 0) return c;
    return a.col <=> b.col;
  }
  friend bool operator==(const Node&, const Node&) = default;
};

enum class Dominance { Dominates, DominatedBy, Equal, Incomparable };

Partition conjugate(const Partition& lambda);
Partition remove_first_row(const Partition& lambda);
Bipartition dual(const Bipartition& b);

Dominance dominance(const Partition& a, const Partition& b);
Dominance dominance(const Bipartition& a, const Bipartition& b);
// a ⊵ b
bool dominates(const Partition& a, const Partition& b);
bool dominates(const Bipartition& a, const Bipartition& b);

// Nodes as component-1 partition nodes; ordered by row.
std::vector<Node> addable_nodes(const Partition& lambda, int component = 1);
std::vector<Node> removable_nodes(const Partition& lambda, int component = 1);
// Ordered by (component, row).
std::vector<Node> addable_nodes(const Bipartition& b);
std::vector<Node> removable_nodes(const Bipartition& b);

// Preconditions: the node is addable (resp. removable) in its component.
Bipartition add_node(const Bipartition& b, const Node& node);
Bipartition remove_node(const Bipartition& b, const Node& node);

// All partitions of n in ascending lexicographic order.
std::vector<Partition> partitions(int n);
// All bipartitions of n in ascending lexicographic order on (first, second).
std::vector<Bipartition> bipartitions(int n);

std::string to_string(const Partition& lambda);
std::string to_string(const Bipartition& b);
std::string to_string(const Node& node);
std::string to_string(Dominance d);

Partition parse_partition(std::string_view text);
Bipartition parse_bipartition(std::string_view text);

}  // namespace hecke
