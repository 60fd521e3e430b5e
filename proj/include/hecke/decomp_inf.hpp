#pragma once

// Decomposition theory for e = ∞ with Q = −q^r.
//
// A regular bipartition (ν,ξ) with dominant r-signature s labels a simple
// module D^(ν,ξ); it occurs exactly once in S^((ν,ξ)^ι) for each involution ι
// compatible with s and in no other Specht module. S^(λ,μ) is irreducible
// iff its signature reads −^a +^b −^c or +^a −^b +^c with a + c ≤ b.

#include <optional>
#include <vector>

#include "hecke/partition.hpp"
#include "hecke/signature.hpp"

namespace hecke {

enum class RunOrientation { MinusPlusMinus, PlusMinusPlus };

struct ShapeReport {
  bool matches = false;
  // Meaningful only when matches: the sequence is X^a Y^b X^c.
  int a = 0;
  int b = 0;
  int c = 0;
  RunOrientation orientation = RunOrientation::MinusPlusMinus;
};

// Among all readings that fit, reports the one with b maximal; ties prefer
// minus-plus-minus.
ShapeReport shape_predicate(const PmSequence& t);

struct DecompRow {
  Bipartition subject;
  int r = 0;
  // Regular labels of the composition factors, each with multiplicity one,
  // ascending.
  std::vector<Bipartition> factors;
};

bool is_irreducible_inf(const Bipartition& b, int r);

DecompRow specht_constituents_inf(const Bipartition& b, int r);

// Labels of the Specht modules containing D^reg, in compatible-involution
// order. Throws NotRegular.
std::vector<Bipartition> simples_spechts_inf(const Bipartition& reg, int r);

struct ParitySweep {
  bool irreducible_for_all = true;
  int window_lo = 0;
  int window_hi = 0;
  std::optional<int> first_failure;  // smallest failing t, if any
};

// Whether b is (∞,t)-irreducible for every t ≡ parity (mod 2). The sweep runs
// over [−(λ_1 + μ′_1), λ′_1 + μ_1], outside of which the signature is a
// single run; the edges are re-checked and the window widened if that ever
// fails. window_override replaces the window by [−W, W] without widening.
ParitySweep inf_irreducible_all_parity(const Bipartition& b, int parity,
                                       std::optional<int> window_override = std::nullopt);

bool is_inf_irreducible_all_parity(const Bipartition& b, int parity,
                                   std::optional<int> window_override = std::nullopt);

std::string to_string(RunOrientation o);

}  // namespace hecke
