#include "hecke/classify.hpp"

#include "hecke/error.hpp"

namespace hecke {

namespace {

void check_two_power_r(int r) {
  if (r != 0 && r != 1) throw Error(ErrorCode::InvalidArgument, "r must be 0 or 1 when q = -1");
}

std::vector<Node> nodes_with_residue(const std::vector<Node>& nodes, int i, const HeckeParams& p) {
  std::vector<Node> out;
  for (const auto& nd : nodes) {
    if (residue(nd, p).value == i) out.push_back(nd);
  }
  return out;
}

}  // namespace

bool is_i_restrictable(const Bipartition& b, int i, int r) {
  check_two_power_r(r);
  const auto p = HeckeParams::two_power(r);
  return !nodes_with_residue(removable_nodes(b), i, p).empty() && nodes_with_residue(addable_nodes(b), i, p).empty();
}

Bipartition restrict_all(const Bipartition& b, int i, int r) {
  if (!is_i_restrictable(b, i, r)) {
    throw Error(ErrorCode::NotRestrictable,
                to_string(b) + " is not " + std::to_string(i) + "-restrictable for r=" + std::to_string(r));
  }
  Bipartition out = b;
  // Distinct removable nodes lie in distinct rows and columns, so removing them
  // one at a time yields the simultaneous removal.
  for (const auto& nd : nodes_with_residue(removable_nodes(b), i, HeckeParams::two_power(r))) out = remove_node(out, nd);
  return out;
}

ChainOutcome reduction_chain(const Bipartition& b, int start_residue, int r) {
  if (start_residue != 1 && start_residue != -1) throw Error(ErrorCode::InvalidArgument, "residue must be +1 or -1");
  ChainOutcome out;
  out.start_residue = start_residue;
  Bipartition cur = b;
  int expected = start_residue;
  while (true) {
    if (cur.second.empty() || cur.first.empty()) {
      out.terminal = true;
      out.terminal_side = cur.second.empty() ? 1 : 2;
      out.terminal_partition = cur.second.empty() ? cur.first : cur.second;
      break;
    }
    if (!is_i_restrictable(cur, expected, r)) break;
    out.steps.push_back({cur, expected});
    cur = restrict_all(cur, expected, r);
    expected = -expected;
  }
  out.last = cur;
  return out;
}

Verdict is_irreducible_inf_verdict(const Bipartition& b, int r) {
  const auto ctx = signature(b, r);
  ShapeWitness w{ctx.signs, shape_predicate(ctx.signs)};
  return {w.shape.matches ? VerdictKind::Irreducible : VerdictKind::Reducible, {}, w};
}

namespace {

VerdictKind from_oracle(OracleAnswer a) {
  switch (a) {
    case OracleAnswer::Irreducible: return VerdictKind::Irreducible;
    case OracleAnswer::Reducible: return VerdictKind::Reducible;
    case OracleAnswer::Unknown: return VerdictKind::Unknown;
  }
  return VerdictKind::Unknown;
}

}  // namespace

Verdict is_irreducible_e2(const Bipartition& b, int r, const TypeA2Oracle& oracle) {
  check_two_power_r(r);
  ChainWitness w;
  for (int start : {1, -1}) {
    auto chain = reduction_chain(b, start, r);
    if (chain.terminal) {
      // Each reduction and the terminal hand-off preserve irreducibility in
      // both directions, so any terminal chain decides.
      const auto answer = oracle.query(chain.terminal_partition);
      Verdict v{from_oracle(answer), {}, {}};
      if (answer == OracleAnswer::Unknown) v.reason = oracle.unknown_reason(chain.terminal_partition);
      w.chains = {std::move(chain)};
      w.oracle_answer = answer;
      v.witness = std::move(w);
      return v;
    }
    w.chains.push_back(std::move(chain));
  }
  return {VerdictKind::Reducible, {}, std::move(w)};
}

Verdict is_irreducible_split(const Bipartition& b, const TypeA2Oracle& oracle, int e) {
  if (e == 0) return {VerdictKind::Irreducible, {}, SplitWitness{}};
  if (e != 2) throw Error(ErrorCode::UnsupportedRegime, "split classification needs e = 2 or e = infinity");
  SplitWitness w{oracle.query(b.first), oracle.query(b.second)};
  Verdict v;
  v.witness = w;
  if (w.first == OracleAnswer::Reducible || w.second == OracleAnswer::Reducible) {
    v.kind = VerdictKind::Reducible;
  } else if (w.first == OracleAnswer::Unknown || w.second == OracleAnswer::Unknown) {
    v.kind = VerdictKind::Unknown;
    v.reason = oracle.unknown_reason(w.first == OracleAnswer::Unknown ? b.first : b.second);
  } else {
    v.kind = VerdictKind::Irreducible;
  }
  return v;
}

Verdict classify(const Bipartition& b, const HeckeParams& p, const TypeA2Oracle& oracle) {
  switch (p.regime) {
    case Regime::InfGeneric: return is_irreducible_split(b, oracle, 0);
    case Regime::InfPower: return is_irreducible_inf_verdict(b, p.r);
    case Regime::TwoGeneric: return is_irreducible_split(b, oracle, 2);
    case Regime::TwoPower: return is_irreducible_e2(b, p.r, oracle);
    case Regime::Finite:
      return {VerdictKind::Unsupported,
              "quantum characteristic e=" + std::to_string(p.e) + " is not supported; only e=2 and e=infinity are",
              {}};
  }
  return {};
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Irreducible: return "Irreducible";
    case VerdictKind::Reducible: return "Reducible";
    case VerdictKind::Unknown: return "Unknown";
    case VerdictKind::Unsupported: return "Unsupported";
  }
  return "?";
}

}  // namespace hecke
