#pragma once

// Text and JSON renderings shared by the C API and the command-line tool.
// JSON field names are stable: subject, regime, r, char, verdict, witness,
// factors (see docs/json-schema.md).

#include <optional>
#include <string>
#include <vector>

#include "hecke/classify.hpp"
#include "hecke/decomp_inf.hpp"
#include "hecke/params.hpp"
#include "hecke/signature.hpp"
#include "hecke/typea.hpp"

namespace hecke {

struct Report {
  std::string text;
  std::string json;  // a single JSON document (one line)
};

Report report_classify(const Bipartition& b, const HeckeParams& p, const Verdict& v, bool with_witness);
Report report_signature(const Bipartition& b, const SignatureContext& ctx);
Report report_constituents(const DecompRow& row);
Report report_simples_in(const Bipartition& reg, int r, const SignatureContext& ctx,
                         const std::vector<Involution>& involutions, const std::vector<Bipartition>& spechts);
// Two-row abacus of B^{r}(λ) over B^{0}(μ) with a sign line under the
// signature points.
Report report_abacus(const Bipartition& b, int r, std::optional<int> lo, std::optional<int> hi);
Report report_abacus(const Partition& lambda, int charge, std::optional<int> lo, std::optional<int> hi);
Report report_blocks(const std::vector<Bipartition>& items, const HeckeParams& p);
Report report_typea(const CanonicalBasis& basis, const TypeA2Oracle& oracle);
Report report_parity(const Bipartition& b, int parity, const ParitySweep& sweep);

}  // namespace hecke
