#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "measlat/canonical.hpp"
#include "measlat/lattice.hpp"

namespace measlat {

struct CatalogEntry {
  std::string name;
  FiniteLattice lattice;
  std::optional<std::size_t> expected_n;
};

/// Named lattices: m2, m3, n5, hexagon9, x7, chain(k), powerset(k).
/// Throws UnknownName.
CatalogEntry named(const std::string& name);

/// Names accepted by `named` that take no parameter.
std::vector<std::string> fixed_names();

inline constexpr std::size_t kMaxEnumerationSize = 8;

/// All lattices with exactly `size` elements, one per isomorphism class,
/// sorted by canonical form. Throws CapExceeded above kMaxEnumerationSize.
std::vector<FiniteLattice> enumerate_all(std::size_t size);

struct TableRow {
  std::size_t size = 0;
  std::string canonical_id;
  std::size_t n = 0;
  FiniteLattice lattice;
};

/// Measurability of every lattice with 1..max_size elements.
std::vector<TableRow> table(std::size_t max_size = 6);

using MeasurabilityMultisets = std::map<std::size_t, std::vector<std::size_t>>;

/// Per-size sorted measurabilities of `rows`.
MeasurabilityMultisets multisets(const std::vector<TableRow>& rows);

/// Published measurabilities of all lattices with at most six elements, per size.
const MeasurabilityMultisets& reference_multisets();

/// Random lattice with at most `max_size` elements: the intersection-closed
/// family generated by random subsets of a small ground set.
FiniteLattice random_lattice(std::mt19937_64& rng, std::size_t max_size);

}  // namespace measlat
