#include "hecke/beta_set.hpp"

#include <algorithm>
#include <functional>

#include "hecke/error.hpp"

namespace hecke {

BetaSet BetaSet::from_elements(int floor, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end(), std::greater<>());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  // Elements contiguous with the dense tail belong to it.
  while (!elements.empty() && elements.back() == floor) {
    elements.pop_back();
    ++floor;
  }
  for (int m : elements) {
    if (m < floor) throw Error(ErrorCode::InvalidArgument, "beta-set element below its dense floor");
  }
  // Listing the set as b_1 > b_2 > …, b_{k+1} = floor − 1 with k = |elements|,
  // and b_N = i − N in the tail, so the charge is floor + k.
  const int k = static_cast<int>(elements.size());
  const int charge = floor + k;
  std::vector<int> parts(elements.size());
  for (int j = 1; j <= k; ++j) parts[static_cast<std::size_t>(j - 1)] = elements[static_cast<std::size_t>(j - 1)] + j - charge;
  return BetaSet(Partition(std::move(parts)), charge);
}

bool BetaSet::contains(int m) const {
  if (m < dense_below()) return true;
  for (int j = 1; j <= shape_.length(); ++j) {
    if (shape_.part(j) + charge_ - j == m) return true;
  }
  return false;
}

std::vector<int> BetaSet::elements_from(int lo) const {
  std::vector<int> out;
  for (int m = lo; m < dense_below(); ++m) out.push_back(m);
  for (int j = shape_.length(); j >= 1; --j) {
    const int m = shape_.part(j) + charge_ - j;
    if (m >= lo) out.push_back(m);
  }
  return out;
}

BetaSet beta_set(const Partition& lambda, int charge) { return BetaSet(lambda, charge); }

std::pair<Partition, int> partition_from_beta(const BetaSet& b) { return {b.shape(), b.charge()}; }

std::string abacus_render(std::span<const BetaSet> rows, int lo, int hi) {
  if (hi < lo) throw Error(ErrorCode::InvalidArgument, "empty abacus window");
  std::size_t width = 1;
  for (int m = lo; m <= hi; ++m) width = std::max(width, std::to_string(m).size());
  const std::size_t cell = width + 1;

  auto pad = [cell](const std::string& s) { return std::string(cell - s.size(), ' ') + s; };
  std::string out;
  for (int m = lo; m <= hi; ++m) out += pad(std::to_string(m));
  out += '\n';
  for (const auto& row : rows) {
    for (int m = lo; m <= hi; ++m) out += pad(row.contains(m) ? "o" : ".");
    out += '\n';
  }
  return out;
}

}  // namespace hecke
