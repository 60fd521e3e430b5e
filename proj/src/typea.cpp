#include "hecke/typea.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hecke/error.hpp"

namespace hecke {

bool is_2regular(const Partition& nu) {
  for (int i = 1; i < nu.length(); ++i) {
    if (nu.part(i) == nu.part(i + 1)) return false;
  }
  return true;
}

int e2_residue(const Node& node) { return ((node.col - node.row) % 2 + 2) % 2; }

namespace {

std::vector<Node> nodes_of_residue(const std::vector<Node>& nodes, int i) {
  std::vector<Node> out;
  for (const auto& nd : nodes) {
    if (e2_residue(nd) == i) out.push_back(nd);
  }
  return out;
}

bool on_side(const Node& other, const Node& gamma, FockConvention convention) {
  return convention == FockConvention::Above ? other.row < gamma.row : other.row > gamma.row;
}

}  // namespace

FockVector f_divided(const FockVector& x, int i, int k, FockConvention convention) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "divided power must be non-negative");
  if (k == 0) return x;
  FockVector out;
  for (const auto& [lambda, coeff] : x) {
    const auto addable = nodes_of_residue(addable_nodes(lambda), i);
    const auto removable = nodes_of_residue(removable_nodes(lambda), i);
    const int a = static_cast<int>(addable.size());
    if (a < k) continue;
    // Every k-subset of the addable i-nodes; i-nodes are never adjacent, so
    // any subset can be added at once.
    std::vector<bool> chosen(static_cast<std::size_t>(a), false);
    std::fill(chosen.end() - k, chosen.end(), true);
    do {
      Bipartition grown{lambda, {}};
      int exponent = 0;
      for (int g = 0; g < a; ++g) {
        if (!chosen[static_cast<std::size_t>(g)]) continue;
        const Node& gamma = addable[static_cast<std::size_t>(g)];
        for (int o = 0; o < a; ++o) {
          if (!chosen[static_cast<std::size_t>(o)] && on_side(addable[static_cast<std::size_t>(o)], gamma, convention)) ++exponent;
        }
        for (const auto& rem : removable) {
          if (on_side(rem, gamma, convention)) --exponent;
        }
        grown = add_node(grown, gamma);
      }
      auto& slot = out[grown.first];
      slot += coeff * LaurentPoly::monomial(exponent);
      if (slot.is_zero()) out.erase(grown.first);
    } while (std::next_permutation(chosen.begin(), chosen.end()));
  }
  return out;
}

std::vector<std::pair<int, int>> ladder_sequence(const Partition& mu) {
  // Node (a,b) lies on ladder a + b − 1; at e = 2 its residue is ladder + 1 mod 2.
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= mu.length(); ++a) {
    for (int b = 1; b <= mu.part(a); ++b) {
      const auto ladder = static_cast<std::size_t>(a + b - 1);
      if (out.size() < ladder) out.resize(ladder);
      out[ladder - 1].second += 1;
    }
  }
  for (std::size_t l = 0; l < out.size(); ++l) out[l].first = static_cast<int>((l + 2) % 2);
  return out;
}

LaurentPoly CanonicalBasis::entry(const Partition& row, const Partition& column) const {
  auto col = columns.find(column);
  if (col == columns.end()) return {};
  auto it = col->second.find(row);
  return it == col->second.end() ? LaurentPoly{} : it->second;
}

LaurentPoly::Coeff CanonicalBasis::row_sum_at_one(const Partition& row) const {
  LaurentPoly::Coeff s = 0;
  for (const auto& [mu, g] : columns) {
    auto it = g.find(row);
    if (it != g.end()) s += it->second.at_one();
  }
  return s;
}

namespace {

bool in_positive_part(const LaurentPoly& p) { return p.is_zero() || p.min_degree() >= 1; }

// The bar-invariant α with α ≡ p modulo v·Z[v].
LaurentPoly bar_invariant_correction(const LaurentPoly& p) {
  LaurentPoly alpha;
  for (const auto& [e, c] : p.terms()) {
    if (e > 0) continue;
    alpha.add_term(e, c);
    if (e < 0) alpha.add_term(-e, c);
  }
  return alpha;
}

}  // namespace

CanonicalBasis compute_canonical_basis(int n, FockConvention convention) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be non-negative");
  CanonicalBasis basis;
  basis.n = n;
  for (const auto& mu : partitions(n)) {
    if (is_2regular(mu)) basis.regular.push_back(mu);
  }
  // Ascending lexicographic order refines dominance, so each correction only
  // needs columns that are already final.
  for (const auto& mu : basis.regular) {
    FockVector v{{Partition{}, LaurentPoly(1)}};
    for (auto [residue, count] : ladder_sequence(mu)) v = f_divided(v, residue, count, convention);

    if (v[mu] != LaurentPoly(1)) {
      throw Error(ErrorCode::InvalidArgument, "ladder vector of " + to_string(mu) + " is not unitriangular");
    }
    for (auto it = basis.regular.rbegin(); it != basis.regular.rend(); ++it) {
      const Partition& lambda = *it;
      if (!(lambda < mu)) continue;
      auto found = v.find(lambda);
      if (found == v.end() || in_positive_part(found->second)) continue;
      const LaurentPoly alpha = bar_invariant_correction(found->second);
      for (const auto& [nu, c] : basis.columns.at(lambda)) {
        auto& slot = v[nu];
        slot -= alpha * c;
        if (slot.is_zero()) v.erase(nu);
      }
    }
    for (const auto& [lambda, c] : v) {
      if (lambda == mu) continue;
      if (!in_positive_part(c) || !dominates(mu, lambda) || c.terms().begin()->second < 0) {
        throw Error(ErrorCode::InvalidArgument, "canonical basis vector G(" + to_string(mu) +
                                                    ") is not in normal form at " + to_string(lambda) +
                                                    ": " + to_string(c));
      }
      for (const auto& [e, k] : c.terms()) {
        if (k < 0) {
          throw Error(ErrorCode::InvalidArgument, "negative coefficient in G(" + to_string(mu) + ")");
        }
      }
    }
    basis.columns.emplace(mu, std::move(v));
  }
  return basis;
}

std::shared_ptr<const CanonicalBasis> canonical_basis(int n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CanonicalBasis>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // Computed outside the lock; a racing duplicate is discarded.
  auto computed = std::make_shared<const CanonicalBasis>(compute_canonical_basis(n));
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(computed)).first->second;
}

std::string to_string(OracleAnswer a) {
  switch (a) {
    case OracleAnswer::Irreducible: return "Irreducible";
    case OracleAnswer::Reducible: return "Reducible";
    case OracleAnswer::Unknown: return "Unknown";
  }
  return "?";
}

std::string TypeA2Oracle::unknown_reason(const Partition&) const { return {}; }

namespace {

bool one_dimensional(const Partition& nu) { return nu.length() <= 1 || nu.part(1) == 1; }

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

void FockSpaceOracle::load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open type-A table '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  load_table_text(buf.str());
}

void FockSpaceOracle::load_table_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto s1 = line.find(';');
    const auto s2 = s1 == std::string::npos ? std::string::npos : line.find(';', s1 + 1);
    if (s2 == std::string::npos) throw ParseError("table line " + std::to_string(line_no) + ": expected p;PARTITION;irr|red", 0);
    const std::string p_text = trim(line.substr(0, s1));
    const std::string part_text = trim(line.substr(s1 + 1, s2 - s1 - 1));
    const std::string verdict = trim(line.substr(s2 + 1));
    unsigned p = 0;
    try {
      p = static_cast<unsigned>(std::stoul(p_text));
    } catch (const std::exception&) {
      throw ParseError("table line " + std::to_string(line_no) + ": bad characteristic '" + p_text + "'", 0);
    }
    bool irreducible = false;
    if (verdict == "irr") irreducible = true;
    else if (verdict != "red") throw ParseError("table line " + std::to_string(line_no) + ": expected irr or red", s2 + 1);
    const Partition nu = parse_partition(part_text);
    if (p == characteristic_) table_[nu] = irreducible;
  }
}

void FockSpaceOracle::set_entry(const Partition& nu, bool irreducible) { table_[nu] = irreducible; }

OracleAnswer FockSpaceOracle::query(const Partition& nu) const {
  if (one_dimensional(nu)) return OracleAnswer::Irreducible;
  if (characteristic_ == 0) {
    return canonical_basis(nu.size())->row_sum_at_one(nu) == 1 ? OracleAnswer::Irreducible
                                                              : OracleAnswer::Reducible;
  }
  if (auto it = table_.find(nu); it != table_.end()) {
    return it->second ? OracleAnswer::Irreducible : OracleAnswer::Reducible;
  }
  return OracleAnswer::Unknown;
}

std::string FockSpaceOracle::unknown_reason(const Partition& nu) const {
  if (query(nu) != OracleAnswer::Unknown) return {};
  return "no entry for " + to_string(nu) + " in characteristic " + std::to_string(characteristic_) +
         "; positive characteristic needs a typea table entry";
}

OracleAnswer is_2irreducible(const Partition& nu, unsigned characteristic) {
  return FockSpaceOracle(characteristic).query(nu);
}

}  // namespace hecke
