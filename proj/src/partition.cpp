#include "hecke/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "hecke/error.hpp"

namespace hecke {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "negative part " + std::to_string(parts_[k]) + " at index " + std::to_string(k + 1));
    }
    if (k > 0 && parts_[k] > parts_[k - 1]) {
      throw MonotonicityError("part " + std::to_string(k + 1) + " (" + std::to_string(parts_[k]) +
                                  ") exceeds the preceding part (" + std::to_string(parts_[k - 1]) + ")",
                              k + 1);
    }
  }
  // Zeros can only trail, and they were stripped.
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.part(1)), 0);
  for (int p : lambda.parts()) {
    for (int i = 0; i < p; ++i) ++out[static_cast<std::size_t>(i)];
  }
  return Partition(std::move(out));
}

Partition remove_first_row(const Partition& lambda) {
  if (lambda.empty()) return lambda;
  auto p = lambda.parts();
  return Partition(std::vector<int>(p.begin() + 1, p.end()));
}

Bipartition dual(const Bipartition& b) { return {conjugate(b.second), conjugate(b.first)}; }

namespace {

// Compares two prefix-sum sequences; entries beyond either end repeat the total.
Dominance compare_prefix_sums(const std::vector<long>& a, const std::vector<long>& b) {
  bool ge = true;
  bool le = true;
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    const long x = i < a.size() ? a[i] : (a.empty() ? 0 : a.back());
    const long y = i < b.size() ? b[i] : (b.empty() ? 0 : b.back());
    if (x < y) ge = false;
    if (x > y) le = false;
  }
  if (ge && le) return Dominance::Equal;
  if (ge) return Dominance::Dominates;
  if (le) return Dominance::DominatedBy;
  return Dominance::Incomparable;
}

std::vector<long> prefix_sums(const Partition& p, long offset, std::size_t len) {
  std::vector<long> out(len);
  long acc = offset;
  for (std::size_t i = 0; i < len; ++i) {
    acc += p.part(static_cast<int>(i + 1));
    out[i] = acc;
  }
  return out;
}

}  // namespace

Dominance dominance(const Partition& a, const Partition& b) {
  const auto len = static_cast<std::size_t>(std::max(a.length(), b.length()) + 1);
  return compare_prefix_sums(prefix_sums(a, 0, len), prefix_sums(b, 0, len));
}

Dominance dominance(const Bipartition& a, const Bipartition& b) {
  // (λ,μ) ⊵ (ξ,ν) iff λ ⊵ ξ and |λ| + μ_1+…+μ_i ≥ |ξ| + ν_1+…+ν_i for all i.
  const auto len1 = static_cast<std::size_t>(std::max(a.first.length(), b.first.length()) + 1);
  const auto len2 = static_cast<std::size_t>(std::max(a.second.length(), b.second.length()) + 1);
  auto sa = prefix_sums(a.first, 0, len1);
  auto sb = prefix_sums(b.first, 0, len1);
  auto ta = prefix_sums(a.second, a.first.size(), len2);
  auto tb = prefix_sums(b.second, b.first.size(), len2);
  sa.insert(sa.end(), ta.begin(), ta.end());
  sb.insert(sb.end(), tb.begin(), tb.end());
  return compare_prefix_sums(sa, sb);
}

bool dominates(const Partition& a, const Partition& b) {
  const auto d = dominance(a, b);
  return d == Dominance::Dominates || d == Dominance::Equal;
}

bool dominates(const Bipartition& a, const Bipartition& b) {
  const auto d = dominance(a, b);
  return d == Dominance::Dominates || d == Dominance::Equal;
}

std::vector<Node> addable_nodes(const Partition& lambda, int component) {
  std::vector<Node> out;
  for (int i = 1; i <= lambda.length() + 1; ++i) {
    const int col = lambda.part(i) + 1;
    if (i == 1 || lambda.part(i - 1) >= col) out.push_back({i, col, component});
  }
  return out;
}

std::vector<Node> removable_nodes(const Partition& lambda, int component) {
  std::vector<Node> out;
  for (int i = 1; i <= lambda.length(); ++i) {
    if (lambda.part(i) > lambda.part(i + 1)) out.push_back({i, lambda.part(i), component});
  }
  return out;
}

std::vector<Node> addable_nodes(const Bipartition& b) {
  auto out = addable_nodes(b.first, 1);
  auto second = addable_nodes(b.second, 2);
  out.insert(out.end(), second.begin(), second.end());
  return out;
}

std::vector<Node> removable_nodes(const Bipartition& b) {
  auto out = removable_nodes(b.first, 1);
  auto second = removable_nodes(b.second, 2);
  out.insert(out.end(), second.begin(), second.end());
  return out;
}

namespace {

Partition with_row_delta(const Partition& p, int row, int delta) {
  std::vector<int> parts(p.parts().begin(), p.parts().end());
  if (static_cast<int>(parts.size()) < row) parts.resize(static_cast<std::size_t>(row), 0);
  parts[static_cast<std::size_t>(row - 1)] += delta;
  return Partition(std::move(parts));
}

}  // namespace

Bipartition add_node(const Bipartition& b, const Node& node) {
  Bipartition out = b;
  Partition& target = node.component == 1 ? out.first : out.second;
  if (target.part(node.row) + 1 != node.col) {
    throw Error(ErrorCode::InvalidArgument, "node " + to_string(node) + " is not addable");
  }
  target = with_row_delta(target, node.row, +1);
  return out;
}

Bipartition remove_node(const Bipartition& b, const Node& node) {
  Bipartition out = b;
  Partition& target = node.component == 1 ? out.first : out.second;
  if (target.part(node.row) != node.col || target.part(node.row + 1) >= node.col) {
    throw Error(ErrorCode::InvalidArgument, "node " + to_string(node) + " is not removable");
  }
  target = with_row_delta(target, node.row, -1);
  return out;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  // Emits in ascending lexicographic order: smaller first parts come first.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = 1; p <= std::min(remaining, max_part); ++p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Bipartition> bipartitions(int n) {
  std::vector<Bipartition> out;
  for (int k = 0; k <= n; ++k) {
    for (const auto& l : partitions(k)) {
      for (const auto& m : partitions(n - k)) out.push_back({l, m});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Partition& lambda) {
  if (lambda.empty()) return "-";
  std::string s;
  for (int p : lambda.parts()) {
    if (!s.empty()) s += ',';
    s += std::to_string(p);
  }
  return s;
}

std::string to_string(const Bipartition& b) { return to_string(b.first) + "|" + to_string(b.second); }

std::string to_string(const Node& node) {
  return "(" + std::to_string(node.row) + "," + std::to_string(node.col) + ")_" + std::to_string(node.component);
}

std::string to_string(Dominance d) {
  switch (d) {
    case Dominance::Dominates: return "Dominates";
    case Dominance::DominatedBy: return "DominatedBy";
    case Dominance::Equal: return "Equal";
    case Dominance::Incomparable: return "Incomparable";
  }
  return "?";
}

namespace {

Partition parse_partition_at(std::string_view text, std::size_t offset) {
  if (text == "-") return {};
  if (text.empty()) throw ParseError("empty partition (use \"-\" for the empty partition)", offset);
  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    if (pos >= text.size()) throw ParseError("expected an integer", offset + pos);
    int value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) throw ParseError("expected an integer", offset + pos);
    if (value <= 0) throw ParseError("parts must be positive", offset + pos);
    parts.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError(std::string("unexpected character '") + text[pos] + "'", offset + pos);
    ++pos;
  }
  return Partition(std::move(parts));
}

}  // namespace

Partition parse_partition(std::string_view text) { return parse_partition_at(text, 0); }

Bipartition parse_bipartition(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("expected '|' separating the two components", text.size());
  if (text.find('|', bar + 1) != std::string_view::npos) {
    throw ParseError("more than one '|'", text.find('|', bar + 1));
  }
  return {parse_partition_at(text.substr(0, bar), 0), parse_partition_at(text.substr(bar + 1), bar + 1)};
}

}  // namespace hecke
