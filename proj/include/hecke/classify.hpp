#pragma once

// Irreducibility verdicts for Specht modules of the type-B Hecke algebra.
//
// q = −1, Q = (−1)^(r+1): remove all removable i-nodes while there are no
// addable i-nodes, alternating i and −i, until one component is empty; the
// remaining partition ν then decides the answer through the type-A oracle.
// If neither starting residue gets that far the module is reducible.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hecke/decomp_inf.hpp"
#include "hecke/params.hpp"
#include "hecke/partition.hpp"
#include "hecke/typea.hpp"

namespace hecke {

struct ChainStep {
  Bipartition before;
  int removed_residue = 0;  // ±1
};

struct ChainOutcome {
  int start_residue = 0;
  std::vector<ChainStep> steps;
  Bipartition last;  // where the chain stopped
  bool terminal = false;
  // Terminal only: the non-empty component (or ∅) and its side, 1 or 2.
  Partition terminal_partition;
  int terminal_side = 1;
};

bool is_i_restrictable(const Bipartition& b, int i, int r);
// Throws NotRestrictable.
Bipartition restrict_all(const Bipartition& b, int i, int r);
ChainOutcome reduction_chain(const Bipartition& b, int start_residue, int r);

enum class VerdictKind { Irreducible, Reducible, Unknown, Unsupported };

struct ShapeWitness {
  PmSequence signature;
  ShapeReport shape;
};

struct ChainWitness {
  // The deciding chain, or both chains when neither reaches a terminal form.
  std::vector<ChainOutcome> chains;
  std::optional<OracleAnswer> oracle_answer;
};

struct SplitWitness {
  OracleAnswer first = OracleAnswer::Irreducible;
  OracleAnswer second = OracleAnswer::Irreducible;
};

using Witness = std::variant<std::monostate, ShapeWitness, ChainWitness, SplitWitness>;

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::string reason;  // Unknown / Unsupported only
  Witness witness;
};

Verdict is_irreducible_inf_verdict(const Bipartition& b, int r);
Verdict is_irreducible_e2(const Bipartition& b, int r, const TypeA2Oracle& oracle);
// e is 2 or 0 (meaning ∞).
Verdict is_irreducible_split(const Bipartition& b, const TypeA2Oracle& oracle, int e);
Verdict classify(const Bipartition& b, const HeckeParams& p, const TypeA2Oracle& oracle);

std::string to_string(VerdictKind k);

}  // namespace hecke
