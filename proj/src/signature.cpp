#include "hecke/signature.hpp"

#include <algorithm>
#include <cassert>

#include "hecke/error.hpp"

namespace hecke {

PmSequence PmSequence::parse(std::string_view text) {
  std::vector<Sign> out;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char c = text[k];
    if (c == '+') {
      out.push_back(Sign::Plus);
    } else if (c == '-') {
      out.push_back(Sign::Minus);
    } else if (static_cast<unsigned char>(c) == 0xE2 && k + 2 < text.size() &&
               static_cast<unsigned char>(text[k + 1]) == 0x88 && static_cast<unsigned char>(text[k + 2]) == 0x92) {
      out.push_back(Sign::Minus);
      k += 2;
    } else {
      throw ParseError(std::string("expected '+' or '-', got '") + c + "'", k);
    }
  }
  return PmSequence(std::move(out));
}

std::size_t PmSequence::count(Sign s) const {
  return static_cast<std::size_t>(std::count(signs_.begin(), signs_.end(), s));
}

std::string to_string(const PmSequence& s) {
  std::string out;
  out.reserve(s.size());
  for (Sign x : s.signs()) out += static_cast<char>(x);
  return out;
}

Involution::Involution(std::vector<int> map) : map_(std::move(map)) {
  const int n = static_cast<int>(map_.size());
  for (int k = 0; k < n; ++k) {
    const int j = map_[static_cast<std::size_t>(k)];
    if (j < 0 || j >= n || map_[static_cast<std::size_t>(j)] != k) {
      throw Error(ErrorCode::InvalidArgument, "not an involution");
    }
  }
}

Involution Involution::identity(std::size_t n) {
  std::vector<int> map(n);
  for (std::size_t k = 0; k < n; ++k) map[k] = static_cast<int>(k);
  return Involution(std::move(map));
}

std::vector<std::pair<int, int>> Involution::cycles() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t k = 0; k < map_.size(); ++k) {
    if (map_[k] > static_cast<int>(k)) out.emplace_back(static_cast<int>(k), map_[k]);
  }
  return out;
}

std::string to_cycle_string(const Involution& iota) {
  const auto cycles = iota.cycles();
  if (cycles.empty()) return "()";
  std::string out;
  for (auto [a, b] : cycles) out += "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
  return out;
}

bool is_dominant(const PmSequence& s) {
  // Every initial segment has #− ≥ #+ ...
  bool prefix_ok = true;
  long balance = 0;
  for (Sign x : s.signs()) {
    balance += (x == Sign::Minus) ? 1 : -1;
    if (balance < 0) {
      prefix_ok = false;
      break;
    }
  }
  if (prefix_ok) return true;
  // ... or every final segment has #+ ≥ #−.
  balance = 0;
  for (auto it = s.signs().rbegin(); it != s.signs().rend(); ++it) {
    balance += (*it == Sign::Plus) ? 1 : -1;
    if (balance < 0) return false;
  }
  return true;
}

namespace {

[[maybe_unused]] bool satisfies_iota_axioms(const PmSequence& s, const Involution& iota) {
  const int n = static_cast<int>(s.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (iota(i) == i && iota(j) == j && s[i] != s[j]) return false;
    }
    if (iota(i) > i && (s[i] != Sign::Minus || s[iota(i)] != Sign::Plus)) return false;
  }
  for (int i = 0; i < n; ++i) {
    const int k = iota(i);
    if (k <= i) continue;
    for (int j = i + 1; j < k; ++j) {
      if (iota(j) == j) return false;
      if (iota(j) > k) return false;
    }
  }
  return true;
}

}  // namespace

Involution iota_s(const PmSequence& s) {
  const std::size_t n = s.size();
  std::vector<int> map(n);
  std::vector<int> open_minus;
  std::vector<int> fixed_plus;
  for (std::size_t k = 0; k < n; ++k) {
    map[k] = static_cast<int>(k);
    if (s[k] == Sign::Minus) {
      open_minus.push_back(static_cast<int>(k));
    } else if (!open_minus.empty()) {
      const int j = open_minus.back();
      open_minus.pop_back();
      map[k] = j;
      map[static_cast<std::size_t>(j)] = static_cast<int>(k);
    } else {
      fixed_plus.push_back(static_cast<int>(k));
    }
  }
  // Fixed points must share a sign.
  if (!open_minus.empty() && !fixed_plus.empty()) {
    throw Error(ErrorCode::NotDominant, "sequence " + to_string(s) + " is not dominant");
  }
  Involution out(std::move(map));
  assert(satisfies_iota_axioms(s, out));
  return out;
}

std::vector<Involution> compatible_involutions(const PmSequence& s) {
  const Involution base = iota_s(s);
  const auto cycles = base.cycles();
  const std::size_t c = cycles.size();
  std::vector<Involution> out;
  out.reserve(std::size_t{1} << c);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
    std::vector<int> map = Involution::identity(s.size()).map();
    for (std::size_t k = 0; k < c; ++k) {
      if (mask & (std::uint64_t{1} << k)) {
        auto [a, b] = cycles[k];
        map[static_cast<std::size_t>(a)] = b;
        map[static_cast<std::size_t>(b)] = a;
      }
    }
    out.emplace_back(std::move(map));
  }
  return out;
}

PmSequence apply_perm(const PmSequence& s, const Involution& iota) {
  if (s.size() != iota.size()) throw Error(ErrorCode::LengthMismatch, "sequence and involution lengths differ");
  std::vector<Sign> out(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) out[k] = s[static_cast<std::size_t>(iota(k))];
  return PmSequence(std::move(out));
}

std::vector<SuitablePair> suitable_pairs(const PmSequence& t) {
  std::vector<SuitablePair> out;
  std::vector<Sign> candidate = t.signs();
  std::sort(candidate.begin(), candidate.end());
  do {
    PmSequence s(candidate);
    if (!is_dominant(s)) continue;
    for (auto& iota : compatible_involutions(s)) {
      if (apply_perm(s, iota) == t) out.push_back({s, std::move(iota)});
    }
  } while (std::next_permutation(candidate.begin(), candidate.end()));
  return out;
}

SignatureContext signature(const Bipartition& b, int r, int charge) {
  SignatureContext ctx;
  ctx.r = r;
  ctx.charge = charge;
  ctx.first = beta_set(b.first, r + charge);
  ctx.second = beta_set(b.second, charge);
  const int lo = std::min(ctx.first.dense_below(), ctx.second.dense_below());
  const int hi = std::max(ctx.first.upper_bound(), ctx.second.upper_bound());
  std::vector<Sign> signs;
  for (int m = lo; m < hi; ++m) {
    const bool in1 = ctx.first.contains(m);
    const bool in2 = ctx.second.contains(m);
    if (in1 == in2) continue;
    ctx.points.push_back(m);
    signs.push_back(in1 ? Sign::Plus : Sign::Minus);
  }
  ctx.signs = PmSequence(std::move(signs));
  return ctx;
}

namespace {

// Rebuilds a bipartition from the common part of the context plus, for each
// component, an explicit list of difference points.
Bipartition rebuild(const SignatureContext& ctx, const std::vector<int>& first_pts,
                    const std::vector<int>& second_pts) {
  const int lo = std::min(ctx.first.dense_below(), ctx.second.dense_below());
  const int hi = std::max(ctx.first.upper_bound(), ctx.second.upper_bound());
  std::vector<int> common;
  for (int m = lo; m < hi; ++m) {
    if (ctx.first.contains(m) && ctx.second.contains(m)) common.push_back(m);
  }
  std::vector<int> e1 = common;
  e1.insert(e1.end(), first_pts.begin(), first_pts.end());
  std::vector<int> e2 = common;
  e2.insert(e2.end(), second_pts.begin(), second_pts.end());
  auto b1 = BetaSet::from_elements(lo, std::move(e1));
  auto b2 = BetaSet::from_elements(lo, std::move(e2));
  return {b1.shape(), b2.shape()};
}

}  // namespace

Bipartition apply_involution(const SignatureContext& ctx, const Involution& iota) {
  if (iota.size() != ctx.size()) throw Error(ErrorCode::LengthMismatch, "involution length differs from signature length");
  std::vector<int> first_pts;
  std::vector<int> second_pts;
  for (std::size_t k = 0; k < ctx.size(); ++k) {
    const int image = ctx.points[static_cast<std::size_t>(iota(k))];
    (ctx.signs[k] == Sign::Plus ? first_pts : second_pts).push_back(image);
  }
  return rebuild(ctx, first_pts, second_pts);
}

Bipartition assign_points(const SignatureContext& ctx, const PmSequence& s) {
  if (s.size() != ctx.size()) throw Error(ErrorCode::LengthMismatch, "sequence length differs from signature length");
  std::vector<int> first_pts;
  std::vector<int> second_pts;
  for (std::size_t k = 0; k < ctx.size(); ++k) (s[k] == Sign::Plus ? first_pts : second_pts).push_back(ctx.points[k]);
  return rebuild(ctx, first_pts, second_pts);
}

bool is_regular_inf(const Bipartition& b, int r) { return is_dominant(signature(b, r).signs); }

bool is_regular_inf_direct(const Bipartition& b, int r, bool generic) {
  if (generic) return true;
  const auto& lambda = b.first;
  const auto& mu = b.second;
  const int len = std::max(lambda.length(), mu.length()) + std::abs(r) + 1;
  for (int i = 1; i <= len; ++i) {
    if (r >= 0) {
      if (lambda.part(i) < mu.part(i) - r) return false;
    } else {
      if (lambda.part(i) < mu.part(i - r)) return false;
    }
  }
  return true;
}

}  // namespace hecke
