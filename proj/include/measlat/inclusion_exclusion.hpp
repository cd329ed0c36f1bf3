#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "measlat/lattice.hpp"

namespace measlat {

/// Sparse integer relation sum_x coeff[x] * nu(x) = 0, sorted by element.
using SparseRow = std::vector<std::pair<Element, std::int64_t>>;

/// The inclusion-exclusion law for a set of distinct elements S:
/// nu(join S) - sum_{T subset S, T nonempty} (-1)^{|T|+1} nu(meet T).
SparseRow inclusion_exclusion_row(const FiniteLattice& lat, std::span<const Element> subset);

/// Number of subsets of an n-set with size in [min_k, max_k], saturating at SIZE_MAX.
std::size_t subset_count(std::size_t n, std::size_t min_k, std::size_t max_k);

/// Visits the subsets of {0..n-1} with size in [min_k, max_k], ordered by size
/// and then lexicographically. Stops early when `visit` returns false.
void for_each_subset(std::size_t n, std::size_t min_k, std::size_t max_k,
                     const std::function<bool(std::span<const Element>)>& visit);

}  // namespace measlat
