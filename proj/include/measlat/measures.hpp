#pragma once

#include <optional>
#include <string>
#include <vector>

#include "measlat/lattice.hpp"
#include "measlat/linalg.hpp"
#include "measlat/spectrum.hpp"

namespace measlat {

/// pi: X -> Z^n, coordinate i being the value of point i. Every measure
/// factors uniquely through it.
struct UniversalMeasure {
  Spectrum spectrum;
  std::vector<std::vector<int>> table;  // table[x][i]
  std::vector<std::string> element_names;

  std::size_t rank() const noexcept { return spectrum.size(); }
  const std::vector<int>& operator()(Element x) const { return table[x]; }
};

UniversalMeasure universal_measure(const FiniteLattice& lat);

/// nu = sum_i c_i * pi_i.
struct Measure {
  std::vector<Rational> coefficients;
  std::vector<Rational> values;  // indexed by element
};

/// Throws DimensionMismatch unless |coefficients| == n.
Measure make_measure(const UniversalMeasure& um, const std::vector<Rational>& coefficients);

struct MeasureVerdict {
  bool ok = true;
  /// Violating subset; empty with `ok == false` means nu(0) != 0.
  std::vector<Element> witness;
  std::string reason;
};

/// Checks nu(0) = 0 (when `normalized`) and inclusion-exclusion for every
/// distinct-element subset of size 2..cap, in size-then-lexicographic order.
MeasureVerdict check_measure(const FiniteLattice& lat, const std::vector<Rational>& values,
                             std::optional<std::size_t> max_subset_size = std::nullopt, bool normalized = true);

/// Unique coefficients c with values = pi * c. Throws NotAMeasure naming the
/// first element with a nonzero residual.
std::vector<Rational> solve_membership(const UniversalMeasure& um, const std::vector<Rational>& values);

/// Measures constant on orbits, described through orbits of points.
struct InvariantMeasureSpace {
  std::vector<std::vector<std::size_t>> orbits;  // sorted, by smallest member
  std::size_t dimension = 0;
  std::vector<std::vector<Rational>> basis;  // orbit indicator coefficient vectors
};

/// Throws NotAnAutomorphism for an invalid generator.
InvariantMeasureSpace invariant_space(const UniversalMeasure& um, const FiniteLattice& lat,
                                      const std::vector<LatticeMorphism>& generators);

/// J stacked with the rows nu(g x) - nu(x); its nullspace is the invariant measures.
ExactMatrix invariant_constraint_matrix(const FiniteLattice& lat, const std::vector<LatticeMorphism>& generators);

/// y_1 = pi(x_1), y_{i+1} = pi(x_{i+1}) (1 - pi(x_1)) ... (1 - pi(x_i)), in Z^n.
/// Throws UnknownElement for an index outside the lattice.
std::vector<std::vector<int>> orthogonalize(const UniversalMeasure& um, const std::vector<Element>& xs);

/// Non-normalized measure mu = nu + constant.
struct NNSplit {
  Measure measure;
  Rational constant;
};

/// Throws NotANNMeasure naming the violating subset.
NNSplit nn_split(const FiniteLattice& lat, const std::vector<Rational>& values,
                 std::optional<std::size_t> max_subset_size = std::nullopt);

}  // namespace measlat
