#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "measlat/lattice.hpp"

namespace measlat {

/// Isomorphism-invariant encoding of a lattice's order relation: the
/// lexicographically least order matrix over all relabelings reachable by
/// partition refinement on (height, up-degree, down-degree) plus backtracking.
struct CanonicalForm {
  std::size_t size = 0;
  std::vector<std::uint8_t> order_bits;  // row-major leq matrix in canonical order
  std::vector<Element> labeling;         // canonical position -> element

  /// Compact printable id: "<size>:<hex of the strict upper triangle>".
  std::string id() const;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.size == b.size && a.order_bits == b.order_bits;
  }
  friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    if (auto c = a.size <=> b.size; c != 0) return c;
    return a.order_bits <=> b.order_bits;
  }
};

CanonicalForm canonical_form(const FiniteLattice& lat);

bool are_isomorphic(const FiniteLattice& x, const FiniteLattice& y);

/// An order isomorphism x -> y, if one exists.
std::optional<std::vector<Element>> find_isomorphism(const FiniteLattice& x, const FiniteLattice& y);

}  // namespace measlat
