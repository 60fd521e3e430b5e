#pragma once

// ±-sequences, the canonical involution of a dominant sequence, compatible
// involutions, and the r-signature of a bipartition.
//
// Positions are 0-based in the API; text forms (cycle lists) are 1-based.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hecke/beta_set.hpp"
#include "hecke/partition.hpp"

namespace hecke {

enum class Sign : char { Plus = '+', Minus = '-' };

class PmSequence {
 public:
  PmSequence() = default;
  explicit PmSequence(std::vector<Sign> signs) : signs_(std::move(signs)) {}

  // Accepts '+' and '-' (and the Unicode minus U+2212).
  static PmSequence parse(std::string_view text);

  std::size_t size() const noexcept { return signs_.size(); }
  bool empty() const noexcept { return signs_.empty(); }
  Sign operator[](std::size_t k) const { return signs_[k]; }
  const std::vector<Sign>& signs() const noexcept { return signs_; }
  std::size_t count(Sign s) const;

  friend auto operator<=>(const PmSequence&, const PmSequence&) = default;
  friend bool operator==(const PmSequence&, const PmSequence&) = default;

 private:
  std::vector<Sign> signs_;
};

std::string to_string(const PmSequence& s);

// A self-inverse permutation of {0, …, n−1}.
class Involution {
 public:
  Involution() = default;
  // Throws InvalidArgument unless map is a self-inverse permutation.
  explicit Involution(std::vector<int> map);
  static Involution identity(std::size_t n);

  std::size_t size() const noexcept { return map_.size(); }
  int operator()(std::size_t k) const { return map_[k]; }
  const std::vector<int>& map() const noexcept { return map_; }
  // 2-cycles (a, b) with a < b, ordered by a.
  std::vector<std::pair<int, int>> cycles() const;

  friend bool operator==(const Involution&, const Involution&) = default;
  friend auto operator<=>(const Involution&, const Involution&) = default;

 private:
  std::vector<int> map_;
};

// "(1,4)(2,3)(6,7)"; the identity prints as "()".
std::string to_cycle_string(const Involution& iota);

bool is_dominant(const PmSequence& s);

// Pairs each + with the nearest unmatched − to its left; the rest are fixed.
// Throws NotDominant.
Involution iota_s(const PmSequence& s);

// All ι with ι(k) ∈ {k, ι_s(k)}. There are 2^c of them for c two-cycles of
// ι_s. Order: bitmask ascending, where the leftmost cycle is the least
// significant bit (the identity first, ι_s last). Throws NotDominant.
std::vector<Involution> compatible_involutions(const PmSequence& s);

// k-th sign of the result is s[ι(k)]. Throws LengthMismatch.
PmSequence apply_perm(const PmSequence& s, const Involution& iota);

struct SuitablePair {
  PmSequence s;
  Involution iota;

  friend bool operator==(const SuitablePair&, const SuitablePair&) = default;
};

// Exhaustive search over all rearrangements s of t's signs (ascending, '+' <
// '-') that are dominant, keeping every compatible ι with s^ι = t. This is an
// exponential oracle, only meant for short sequences.
std::vector<SuitablePair> suitable_pairs(const PmSequence& t);

// The data needed to rebuild bipartitions from involutions: the beta-sets
// B_1 = B^{r+i}(λ), B_2 = B^i(μ), and the points b_1 < … < b_n of their
// symmetric difference with their signs.
struct SignatureContext {
  int r = 0;
  int charge = 0;  // i
  BetaSet first;   // B_1
  BetaSet second;  // B_2
  std::vector<int> points;
  PmSequence signs;

  std::size_t size() const noexcept { return points.size(); }
};

SignatureContext signature(const Bipartition& b, int r, int charge = 0);

// B_k^ι = (B_1 ∩ B_2) ∪ {b_ι(j) : b_j ∈ B_k \ B_other}. Throws LengthMismatch.
Bipartition apply_involution(const SignatureContext& ctx, const Involution& iota);

// The bipartition whose beta-sets share B_1 ∩ B_2 and take b_k in the first
// component exactly when s_k = +. Throws LengthMismatch.
Bipartition assign_points(const SignatureContext& ctx, const PmSequence& s);

// Regularity at e = ∞ via dominance of the signature.
bool is_regular_inf(const Bipartition& b, int r);

// Regularity at e = ∞ from the row inequalities. With generic = true (−Q not
// a power of q) every bipartition is regular; otherwise −Q = q^r and
// r ≥ 0: λ_i ≥ μ_i − r for all i; r ≤ 0: λ_i ≥ μ_{i−r} for all i.
bool is_regular_inf_direct(const Bipartition& b, int r, bool generic = false);

}  // namespace hecke
