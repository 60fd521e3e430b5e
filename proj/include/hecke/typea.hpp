#pragma once

// Irreducibility of type-A Specht modules at q = −1.
//
// In characteristic 0 this is read off the level-1 Fock space at e = 2: the
// canonical basis G(μ), μ 2-regular, gives the decomposition numbers
// d_λμ(v), and S^λ is irreducible iff Σ_μ d_λμ(1) = 1. Positive
// characteristic has no algorithm; answers come from a user-supplied table
// or are Unknown.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "hecke/laurent.hpp"
#include "hecke/partition.hpp"

namespace hecke {

using FockVector = std::map<Partition, LaurentPoly>;

// Which addable/removable i-nodes are counted in the v-exponent of the
// divided-power action: those strictly above (smaller row) or strictly below
// the added node.
enum class FockConvention { Above, Below };

// The convention for which the canonical basis lands in normal form.
inline constexpr FockConvention kFockConvention = FockConvention::Above;

bool is_2regular(const Partition& nu);

// (col − row) mod 2
int e2_residue(const Node& node);

// f_i^(k): adds k addable nodes of residue i in every possible way, weighting
// each result by v^N, N = Σ_{γ added} (#addable i-nodes not added − #removable
// i-nodes) on the convention's side of γ.
FockVector f_divided(const FockVector& x, int i, int k, FockConvention convention = kFockConvention);

// (residue, node count) for ladders 1, 2, … of a partition at e = 2.
std::vector<std::pair<int, int>> ladder_sequence(const Partition& mu);

struct CanonicalBasis {
  int n = 0;
  std::vector<Partition> regular;               // ascending
  std::map<Partition, FockVector> columns;      // G(μ) for each 2-regular μ

  LaurentPoly entry(const Partition& row, const Partition& column) const;
  // Σ_μ d_row,μ(1)
  LaurentPoly::Coeff row_sum_at_one(const Partition& row) const;
};

// Ladder induction from the empty partition followed by triangular
// correction. Throws if the result is not in normal form.
CanonicalBasis compute_canonical_basis(int n, FockConvention convention = kFockConvention);

// Process-wide memoized canonical_basis; safe for concurrent callers.
std::shared_ptr<const CanonicalBasis> canonical_basis(int n);

enum class OracleAnswer { Irreducible, Reducible, Unknown };

std::string to_string(OracleAnswer a);

class TypeA2Oracle {
 public:
  virtual ~TypeA2Oracle() = default;
  virtual OracleAnswer query(const Partition& nu) const = 0;
  virtual unsigned characteristic() const = 0;
  // Why the last Unknown was returned for nu; empty otherwise.
  virtual std::string unknown_reason(const Partition& nu) const;
};

// Characteristic 0 through the canonical basis; characteristic p through a
// lookup table. One-dimensional modules (∅, (n), (1^n)) are irreducible in
// every characteristic.
class FockSpaceOracle final : public TypeA2Oracle {
 public:
  explicit FockSpaceOracle(unsigned characteristic = 0) : characteristic_(characteristic) {}

  // Lines "p;PARTITION;irr|red"; '#' starts a comment. Entries for other
  // primes are skipped. Throws Io or Parse.
  void load_table(const std::string& path);
  void load_table_text(const std::string& text);
  void set_entry(const Partition& nu, bool irreducible);

  OracleAnswer query(const Partition& nu) const override;
  unsigned characteristic() const override { return characteristic_; }
  std::string unknown_reason(const Partition& nu) const override;

 private:
  unsigned characteristic_;
  std::map<Partition, bool> table_;
};

OracleAnswer is_2irreducible(const Partition& nu, unsigned characteristic);

}  // namespace hecke
