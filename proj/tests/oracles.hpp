#pragma once

// Deliberately naive reference implementations used to cross-check the
// library. They only read the order relation `leq` (or plain integer data)
// and share no code paths with the optimized routines.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "measlat/measlat.hpp"

namespace oracle {

using measlat::Element;
using measlat::FiniteLattice;
using measlat::Rational;

/// Greatest lower bound by scanning all elements.
inline std::optional<Element> meet(const FiniteLattice& lat, Element a, Element b) {
  std::vector<Element> lower;
  for (Element z = 0; z < lat.size(); ++z)
    if (lat.leq(z, a) && lat.leq(z, b)) lower.push_back(z);
  for (Element g : lower)
    if (std::all_of(lower.begin(), lower.end(), [&](Element z) { return lat.leq(z, g); })) return g;
  return std::nullopt;
}

inline std::optional<Element> join(const FiniteLattice& lat, Element a, Element b) {
  std::vector<Element> upper;
  for (Element z = 0; z < lat.size(); ++z)
    if (lat.leq(a, z) && lat.leq(b, z)) upper.push_back(z);
  for (Element l : upper)
    if (std::all_of(upper.begin(), upper.end(), [&](Element z) { return lat.leq(l, z); })) return l;
  return std::nullopt;
}

/// All {0,1}-valuations over 2^|X| candidates that respect bounds, meet and join.
inline std::vector<std::vector<std::uint8_t>> points(const FiniteLattice& lat) {
  const std::size_t n = lat.size();
  std::vector<std::vector<std::uint8_t>> out;
  if (n > 20) return out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto v = [&](Element x) -> int { return static_cast<int>((mask >> x) & 1U); };
    if (v(lat.bottom()) != 0 || v(lat.top()) != 1) continue;
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a)
      for (Element b = 0; b < n && ok; ++b)
        ok = v(*meet(lat, a, b)) == v(a) * v(b) && v(*join(lat, a, b)) == v(a) + v(b) - v(a) * v(b);
    if (!ok) continue;
    std::vector<std::uint8_t> values(n);
    for (Element x = 0; x < n; ++x) values[x] = static_cast<std::uint8_t>(v(x));
    out.push_back(values);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Join-irreducible elements: x != 0 with exactly one lower cover, found from `leq` alone.
inline std::size_t join_irreducible_count(const FiniteLattice& lat) {
  std::size_t count = 0;
  for (Element x = 0; x < lat.size(); ++x) {
    if (x == lat.bottom()) continue;
    std::size_t lower_covers = 0;
    for (Element y = 0; y < lat.size(); ++y) {
      if (y == x || !lat.leq(y, x)) continue;
      bool cover = true;
      for (Element z = 0; z < lat.size() && cover; ++z)
        cover = !(z != x && z != y && lat.leq(y, z) && lat.leq(z, x));
      lower_covers += cover;
    }
    count += lower_covers == 1;
  }
  return count;
}

/// Isomorphism test over all |X|! bijections.
inline bool isomorphic(const FiniteLattice& x, const FiniteLattice& y) {
  if (x.size() != y.size()) return false;
  std::vector<Element> perm(x.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Element a = 0; a < x.size() && ok; ++a)
      for (Element b = 0; b < x.size() && ok; ++b) ok = x.leq(a, b) == y.leq(perm[a], perm[b]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Rank over Q by textbook Gaussian elimination on rationals.
inline std::size_t rank(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

/// Inclusion-exclusion residual of `values` on the subset `s`, computed from the definition.
inline Rational inclusion_exclusion_residual(const FiniteLattice& lat, const std::vector<Rational>& values,
                                             const std::vector<Element>& s) {
  Element big = s[0];
  for (Element x : s) big = *join(lat, big, x);
  Rational total = values[big];
  for (std::uint32_t t = 1; t < (1U << s.size()); ++t) {
    Element m = lat.top();
    int bits = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      if ((t >> i) & 1U) {
        m = *meet(lat, m, s[i]);
        ++bits;
      }
    total += (bits % 2 == 1 ? -1 : 1) * values[m];
  }
  return total;
}

/// Lattices with exactly `size` elements up to isomorphism, from all binary
/// relations on the inner elements (slow; size <= 6).
inline std::vector<FiniteLattice> lattices(std::size_t size) {
  std::vector<FiniteLattice> out;
  if (size == 0) return out;
  if (size == 1) {
    out.push_back(FiniteLattice::from_relation({"0"}, {}));
    return out;
  }
  const std::size_t k = size - 2;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) slots.emplace_back(i, j);
  std::vector<std::string> names{"0"};
  for (std::size_t i = 0; i < k; ++i) names.push_back("y" + std::to_string(i));
  names.push_back("1");
  for (std::uint64_t rel = 0; rel < (std::uint64_t{1} << slots.size()); ++rel) {
    auto less = [&](std::size_t i, std::size_t j) {
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (slots[s] == std::make_pair(i, j)) return ((rel >> s) & 1U) != 0;
      return false;
    };
    bool order = true;
    for (std::size_t i = 0; i < k && order; ++i)
      for (std::size_t j = 0; j < k && order; ++j) {
        if (i != j && less(i, j) && less(j, i)) order = false;
        for (std::size_t l = 0; l < k && order; ++l)
          if (less(i, j) && less(j, l) && i != l && !less(i, l)) order = false;
      }
    if (!order) continue;
    std::vector<FiniteLattice::Cover> relation;
    const auto top = static_cast<Element>(k + 1);
    if (k == 0) relation.emplace_back(0, top);
    for (std::size_t i = 0; i < k; ++i) {
      relation.emplace_back(0, static_cast<Element>(i + 1));
      relation.emplace_back(static_cast<Element>(i + 1), top);
      for (std::size_t j = 0; j < k; ++j)
        if (i != j && less(i, j)) relation.emplace_back(static_cast<Element>(i + 1), static_cast<Element>(j + 1));
    }
    try {
      FiniteLattice lat = FiniteLattice::from_relation(names, relation);
      if (std::none_of(out.begin(), out.end(), [&](const FiniteLattice& o) { return isomorphic(o, lat); }))
        out.push_back(std::move(lat));
    } catch (const measlat::Error&) {
    }
  }
  return out;
}

/// Every lattice with 1..6 elements.
inline std::vector<FiniteLattice> small_catalog(std::size_t max_size = 6) {
  std::vector<FiniteLattice> out;
  for (std::size_t s = 1; s <= max_size; ++s)
    for (auto& l : measlat::enumerate_all(s)) out.push_back(std::move(l));
  return out;
}

}  // namespace oracle
