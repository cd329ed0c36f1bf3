#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "measlat/groebner.hpp"
#include "measlat/lattice.hpp"
#include "measlat/spectrum.hpp"

namespace measlat {

/// D: X -> P(points), D(x) = {i : point_i(x) = 1}, together with the Boolean
/// lattice Y = P(points).
struct BooleanHull {
  static constexpr std::size_t kMaxMaterializedPoints = 12;

  Spectrum spectrum;
  std::vector<std::vector<std::size_t>> d_map;  // element -> sorted point indices
  /// P(points) with element index = bitmask; absent beyond kMaxMaterializedPoints.
  std::optional<FiniteLattice> lattice;

  std::size_t points() const noexcept { return spectrum.size(); }
  /// D(x) as a bitmask (valid while points() < 64).
  std::uint64_t mask(Element x) const;
};

BooleanHull hull(const FiniteLattice& lat);

/// Exhaustive check of the hull laws: bounds, meets, joins, order,
/// complements, separation (the image generates all of P(points)), and, when
/// `gb` is given, D(x) = D(y) implying x = y in GF(2)[X]/I. Separation is
/// checked below 24 points; throws CapExceeded from 64 points on.
std::optional<std::string> hull_violation(const FiniteLattice& lat, const BooleanHull& h,
                                          const GroebnerBasis* gb = nullptr);

/// Closure of the image of D under intersection, union and complement, as bitmasks.
std::vector<std::uint64_t> generated_subalgebra(const BooleanHull& h);

/// All bounded-lattice morphisms x -> y, as element maps, in lexicographic order.
std::vector<std::vector<Element>> enumerate_morphisms(const FiniteLattice& x, const FiniteLattice& y);

struct UniversalPropertyVerdict {
  bool ok = true;
  std::size_t maps_checked = 0;  // number of f: X -> target
  std::string reason;
};

/// For every lattice map f: X -> target, counts the lattice maps g: Y -> target
/// with f = g o D; the verdict is ok iff each count is exactly one.
/// Throws TargetNotBoolean and CapExceeded.
UniversalPropertyVerdict verify_universal_property(const FiniteLattice& lat, const FiniteLattice& target,
                                                   std::size_t max_source = 6, std::size_t max_target = 16);

struct RingVerdict {
  bool ok = true;
  std::string reason;
};

/// For a Boolean lattice, compares the ring (symmetric difference, meet) on
/// its elements with GF(2)[X]/I through the universal measure. Throws NotBoolean.
RingVerdict boolean_ring_structure(const FiniteLattice& lat);

/// D'(f(x)) == f_*(D(x)) for every x, where f_* pulls points of the target back along f.
bool naturality_holds(const LatticeMorphism& f);

}  // namespace measlat
