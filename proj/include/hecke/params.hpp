#pragma once

// Parameter regimes and node residues.
//
// With -Q = q^r and e = ∞ a residue is the integer exponent of q. At q = -1 it
// is a sign. In the generic regimes (-Q not a power of q) residues of the two
// components never coincide, so they are only exposed as component-tagged
// multisets.

#include <string>
#include <string_view>
#include <vector>

#include "hecke/partition.hpp"

namespace hecke {

enum class Regime {
  InfGeneric,  // e = ∞, -Q not a power of q
  InfPower,    // e = ∞, Q = -q^r
  TwoGeneric,  // q = -1, Q ≠ ±1
  TwoPower,    // q = -1, Q = (-1)^(r+1), r ∈ {0,1}
  Finite,      // 2 < e < ∞; recognised but unsupported
};

struct HeckeParams {
  Regime regime = Regime::InfGeneric;
  int r = 0;                    // InfPower, TwoPower
  int e = 0;                    // Finite only
  unsigned characteristic = 0;  // 0 or a prime; consulted by the type-A oracle only

  static HeckeParams inf_generic(unsigned p = 0) { return {Regime::InfGeneric, 0, 0, p}; }
  static HeckeParams inf_power(int r, unsigned p = 0) { return {Regime::InfPower, r, 0, p}; }
  static HeckeParams two_generic(unsigned p = 0) { return {Regime::TwoGeneric, 0, 0, p}; }
  static HeckeParams two_power(int r, unsigned p = 0);
  static HeckeParams finite(int e, int r = 0, unsigned p = 0) { return {Regime::Finite, r, e, p}; }

  bool is_generic() const { return regime == Regime::InfGeneric || regime == Regime::TwoGeneric; }

  friend bool operator==(const HeckeParams&, const HeckeParams&) = default;
};

// "inf-generic", "inf:r=R", "two-generic", "two:r=0|1", "e:N" (N ≥ 3, optional ":r=R").
HeckeParams parse_params(std::string_view regime, unsigned characteristic = 0);
std::string to_string(const HeckeParams& p);

struct Residue {
  int component = 0;  // 0 in the power regimes; 1 or 2 in the generic regimes
  int value = 0;      // exponent of q (e = ∞) or ±1 (q = -1)

  friend auto operator<=>(const Residue&, const Residue&) = default;
};

// InfPower(r): r + col − row on component 1, col − row on component 2.
// TwoPower(r): (−1)^(r+col−row) on component 1, (−1)^(col−row) on component 2.
// Throws UnsupportedRegime for the generic and finite regimes.
Residue residue(const Node& node, const HeckeParams& p);

// Sorted multiset of the residues of every node. Generic regimes tag each entry
// with its component.
std::vector<Residue> residue_multiset(const Bipartition& b, const HeckeParams& p);

bool same_block(const Bipartition& a, const Bipartition& b, const HeckeParams& p);

std::string to_string(const Residue& x);

}  // namespace hecke
