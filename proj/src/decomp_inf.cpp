#include "hecke/decomp_inf.hpp"

#include <algorithm>

#include "hecke/error.hpp"

namespace hecke {

ShapeReport shape_predicate(const PmSequence& t) {
  const int n = static_cast<int>(t.size());
  ShapeReport best;
  auto fits = [&](Sign outer, int a, int b) {
    for (int k = 0; k < n; ++k) {
      const bool inner = k >= a && k < a + b;
      const Sign want = inner ? (outer == Sign::Plus ? Sign::Minus : Sign::Plus) : outer;
      if (t[static_cast<std::size_t>(k)] != want) return false;
    }
    return true;
  };
  for (auto orientation : {RunOrientation::MinusPlusMinus, RunOrientation::PlusMinusPlus}) {
    const Sign outer = orientation == RunOrientation::MinusPlusMinus ? Sign::Minus : Sign::Plus;
    for (int a = 0; a <= n; ++a) {
      for (int b = 0; a + b <= n; ++b) {
        const int c = n - a - b;
        if (a + c > b || !fits(outer, a, b)) continue;
        if (!best.matches || b > best.b) best = {true, a, b, c, orientation};
      }
    }
  }
  return best;
}

bool is_irreducible_inf(const Bipartition& b, int r) { return shape_predicate(signature(b, r).signs).matches; }

DecompRow specht_constituents_inf(const Bipartition& b, int r) {
  const auto ctx = signature(b, r);
  DecompRow row{b, r, {}};
  for (const auto& pair : suitable_pairs(ctx.signs)) row.factors.push_back(assign_points(ctx, pair.s));
  std::sort(row.factors.begin(), row.factors.end());
  return row;
}

std::vector<Bipartition> simples_spechts_inf(const Bipartition& reg, int r) {
  const auto ctx = signature(reg, r);
  if (!is_dominant(ctx.signs)) {
    throw Error(ErrorCode::NotRegular, to_string(reg) + " is not regular for r=" + std::to_string(r));
  }
  std::vector<Bipartition> out;
  for (const auto& iota : compatible_involutions(ctx.signs)) out.push_back(apply_involution(ctx, iota));
  return out;
}

namespace {

bool single_run(const PmSequence& s) {
  return s.count(Sign::Plus) == 0 || s.count(Sign::Minus) == 0;
}

int floor_mod2(int x) { return ((x % 2) + 2) % 2; }

}  // namespace

ParitySweep inf_irreducible_all_parity(const Bipartition& b, int parity, std::optional<int> window_override) {
  if (parity != 0 && parity != 1) throw Error(ErrorCode::InvalidArgument, "parity must be 0 or 1");
  ParitySweep out;
  if (window_override) {
    out.window_lo = -*window_override;
    out.window_hi = *window_override;
  } else {
    out.window_lo = -(b.first.part(1) + conjugate(b.second).part(1));
    out.window_hi = conjugate(b.first).part(1) + b.second.part(1);
    // Beyond the edges the signature must be a single run; widen until it is.
    while (!single_run(signature(b, out.window_lo).signs)) --out.window_lo;
    while (!single_run(signature(b, out.window_hi).signs)) ++out.window_hi;
  }
  for (int t = out.window_lo; t <= out.window_hi; ++t) {
    if (floor_mod2(t) != parity) continue;
    if (!is_irreducible_inf(b, t)) {
      out.irreducible_for_all = false;
      out.first_failure = t;
      break;
    }
  }
  return out;
}

bool is_inf_irreducible_all_parity(const Bipartition& b, int parity, std::optional<int> window_override) {
  return inf_irreducible_all_parity(b, parity, window_override).irreducible_for_all;
}

std::string to_string(RunOrientation o) {
  return o == RunOrientation::MinusPlusMinus ? "minus-plus-minus" : "plus-minus-plus";
}

}  // namespace hecke
