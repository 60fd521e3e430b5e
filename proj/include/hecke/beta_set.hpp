#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hecke/partition.hpp"

namespace hecke {

// The co-finite integer set B^i(λ) = {λ_j + i − j : j ≥ 1}, stored as (i, λ).
class BetaSet {
 public:
  BetaSet() = default;
  BetaSet(Partition shape, int charge) : shape_(std::move(shape)), charge_(charge) {}

  // Canonicalises the set consisting of every integer below `floor` together
  // with `elements` (each ≥ floor, duplicates ignored).
  static BetaSet from_elements(int floor, std::vector<int> elements);

  const Partition& shape() const noexcept { return shape_; }
  int charge() const noexcept { return charge_; }

  // Every integer below this bound belongs to the set.
  int dense_below() const noexcept { return charge_ - shape_.length(); }
  // No element is ≥ this bound.
  int upper_bound() const noexcept { return charge_ + shape_.part(1); }

  bool contains(int m) const;
  // Elements in [lo, upper_bound()), ascending.
  std::vector<int> elements_from(int lo) const;

  friend bool operator==(const BetaSet&, const BetaSet&) = default;

 private:
  Partition shape_;
  int charge_ = 0;
};

BetaSet beta_set(const Partition& lambda, int charge);
std::pair<Partition, int> partition_from_beta(const BetaSet& b);

// One line per beta-set, 'o' for a bead and '.' for a gap over positions
// lo..hi inclusive, under a ruler of position labels.
std::string abacus_render(std::span<const BetaSet> rows, int lo, int hi);

}  // namespace hecke
