#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "measlat/lattice.hpp"

namespace measlat {

/// A {0,1}-valuation that preserves bounds, meets and joins, i.e. a lattice
/// morphism onto the two-element chain.
struct TwoValuedPoint {
  std::vector<std::uint8_t> values;  // indexed by element

  bool operator()(Element x) const { return values[x] != 0; }
  friend auto operator<=>(const TwoValuedPoint&, const TwoValuedPoint&) = default;
};

/// Points sorted lexicographically on their value vectors.
struct Spectrum {
  std::vector<TwoValuedPoint> points;

  std::size_t size() const noexcept { return points.size(); }
};

bool is_two_valued_point(const FiniteLattice& lat, const std::vector<std::uint8_t>& values);

/// Depth-first search over up-sets containing the top and avoiding the
/// bottom, with meet/join propagation.
Spectrum enumerate_points(const FiniteLattice& lat);

/// Rank of the ring of measures: the number of two-valued points.
std::size_t measurability(const FiniteLattice& lat);

/// Permutation `s` of point indices with point[s[i]](x) == point[i](g(x)).
/// Throws NotAnAutomorphism when `g` is not an automorphism of the lattice.
std::vector<std::size_t> point_action(const FiniteLattice& lat, const LatticeMorphism& g, const Spectrum& spec);

}  // namespace measlat
