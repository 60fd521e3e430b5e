#include "hecke/params.hpp"

#include <algorithm>
#include <charconv>

#include "hecke/error.hpp"

namespace hecke {

HeckeParams HeckeParams::two_power(int r, unsigned p) {
  if (r != 0 && r != 1) throw Error(ErrorCode::InvalidArgument, "two:r must be 0 or 1, got " + std::to_string(r));
  return {Regime::TwoPower, r, 0, p};
}

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::InvalidArgument, "invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

// Accepts "r=R" and returns R.
int parse_r_clause(std::string_view clause) {
  if (clause.substr(0, 2) != "r=") {
    throw Error(ErrorCode::InvalidArgument, "expected r=<int>, got '" + std::string(clause) + "'");
  }
  return parse_int(clause.substr(2), "r");
}

}  // namespace

HeckeParams parse_params(std::string_view regime, unsigned characteristic) {
  if (regime == "inf-generic") return HeckeParams::inf_generic(characteristic);
  if (regime == "two-generic") return HeckeParams::two_generic(characteristic);
  if (regime.substr(0, 4) == "inf:") return HeckeParams::inf_power(parse_r_clause(regime.substr(4)), characteristic);
  if (regime.substr(0, 4) == "two:") return HeckeParams::two_power(parse_r_clause(regime.substr(4)), characteristic);
  if (regime.substr(0, 2) == "e:" || regime.substr(0, 2) == "e=") {
    auto rest = regime.substr(2);
    const auto colon = rest.find(':');
    const int e = parse_int(rest.substr(0, colon), "e");
    const int r = colon == std::string_view::npos ? 0 : parse_r_clause(rest.substr(colon + 1));
    if (e == 2) return HeckeParams::two_power(((r % 2) + 2) % 2, characteristic);
    if (e < 2) throw Error(ErrorCode::InvalidArgument, "e must be at least 2");
    return HeckeParams::finite(e, r, characteristic);
  }
  throw Error(ErrorCode::InvalidArgument,
              "unknown regime '" + std::string(regime) +
                  "' (expected inf-generic, inf:r=R, two-generic, two:r=0|1 or e:N)");
}

std::string to_string(const HeckeParams& p) {
  switch (p.regime) {
    case Regime::InfGeneric: return "inf-generic";
    case Regime::InfPower: return "inf:r=" + std::to_string(p.r);
    case Regime::TwoGeneric: return "two-generic";
    case Regime::TwoPower: return "two:r=" + std::to_string(p.r);
    case Regime::Finite: return "e:" + std::to_string(p.e) + ":r=" + std::to_string(p.r);
  }
  return "?";
}

namespace {

int sign_of_power(int exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace

Residue residue(const Node& node, const HeckeParams& p) {
  const int content = node.col - node.row;
  switch (p.regime) {
    case Regime::InfPower:
      return {0, node.component == 1 ? p.r + content : content};
    case Regime::TwoPower:
      return {0, sign_of_power(node.component == 1 ? p.r + content : content)};
    default:
      throw Error(ErrorCode::UnsupportedRegime,
                  "per-node residues are only defined for inf:r=R and two:r=R, not " + to_string(p));
  }
}

std::vector<Residue> residue_multiset(const Bipartition& b, const HeckeParams& p) {
  if (p.regime == Regime::Finite) {
    throw Error(ErrorCode::UnsupportedRegime, "residues for " + to_string(p) + " are not supported");
  }
  std::vector<Residue> out;
  out.reserve(static_cast<std::size_t>(b.size()));
  for (int k = 1; k <= 2; ++k) {
    const Partition& part = b.component(k);
    for (int i = 1; i <= part.length(); ++i) {
      for (int j = 1; j <= part.part(i); ++j) {
        const Node node{i, j, k};
        switch (p.regime) {
          case Regime::InfGeneric: out.push_back({k, j - i}); break;
          case Regime::TwoGeneric: out.push_back({k, sign_of_power(j - i)}); break;
          default: out.push_back(residue(node, p)); break;
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool same_block(const Bipartition& a, const Bipartition& b, const HeckeParams& p) {
  return a.size() == b.size() && residue_multiset(a, p) == residue_multiset(b, p);
}

std::string to_string(const Residue& x) {
  std::string v;
  if (x.value > 0) v = "+";
  v += std::to_string(x.value);
  if (x.component == 0) return v;
  return v + "@" + std::to_string(x.component);
}

}  // namespace hecke
