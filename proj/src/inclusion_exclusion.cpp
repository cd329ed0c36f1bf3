#include "measlat/inclusion_exclusion.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace measlat {

SparseRow inclusion_exclusion_row(const FiniteLattice& lat, std::span<const Element> subset) {
  std::map<Element, std::int64_t> coeff;
  // (meet of T, (-1)^{|T|+1}) for every nonempty T seen so far.
  std::vector<std::pair<Element, std::int64_t>> meets;
  meets.reserve(std::size_t{1} << std::min<std::size_t>(subset.size(), 20));
  Element joined = lat.bottom();
  for (Element x : subset) {
    joined = lat.join(joined, x);
    const std::size_t before = meets.size();
    for (std::size_t i = 0; i < before; ++i) meets.emplace_back(lat.meet(meets[i].first, x), -meets[i].second);
    meets.emplace_back(x, 1);
  }
  coeff[joined] += 1;
  for (auto [m, sign] : meets) coeff[m] -= sign;
  SparseRow row;
  for (auto [x, c] : coeff)
    if (c != 0) row.emplace_back(x, c);
  return row;
}

std::size_t subset_count(std::size_t n, std::size_t min_k, std::size_t max_k) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t total = 0;
  std::size_t binom = 1;  // C(n, k)
  for (std::size_t k = 0; k <= std::min(n, max_k); ++k) {
    if (k > 0) {
      // C(n,k) = C(n,k-1) * (n-k+1) / k, saturating.
      const std::size_t factor = n - k + 1;
      if (binom > kMax / factor) return kMax;
      binom = binom * factor / k;
    }
    if (k >= min_k) {
      if (total > kMax - binom) return kMax;
      total += binom;
    }
  }
  return total;
}

void for_each_subset(std::size_t n, std::size_t min_k, std::size_t max_k,
                     const std::function<bool(std::span<const Element>)>& visit) {
  for (std::size_t k = min_k; k <= std::min(n, max_k); ++k) {
    std::vector<Element> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<Element>(i);
    while (true) {
      if (!visit(idx)) return;
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

}  // namespace measlat
