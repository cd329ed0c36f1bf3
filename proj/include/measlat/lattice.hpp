#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace measlat {

/// Positional index of a lattice element. Names exist for I/O only.
using Element = std::uint32_t;

inline constexpr std::size_t kDefaultSizeCap = 4096;

/// Immutable finite bounded lattice with precomputed order, meet and join tables.
///
/// Every instance satisfies the lattice axioms: construction either succeeds
/// with complete tables or throws `Error` (NotALattice, NotBounded,
/// CycleInCovers, DuplicateElement, UnknownElement, SizeCapExceeded).
class FiniteLattice {
 public:
  using Cover = std::pair<Element, Element>;  // (lower, upper)

  /// Builds a lattice from a Hasse diagram. Cover pairs `(a, b)` read "a is
  /// covered by b"; redundant (transitively implied) pairs are accepted.
  static FiniteLattice from_covers(const std::vector<std::string>& elements,
                                   const std::vector<std::pair<std::string, std::string>>& covers,
                                   std::size_t size_cap = kDefaultSizeCap);

  /// Same as `from_covers` with the relation given by element indices.
  static FiniteLattice from_relation(std::vector<std::string> names, const std::vector<Cover>& relation,
                                     std::size_t size_cap = kDefaultSizeCap);

  std::size_t size() const noexcept { return names_.size(); }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  bool leq(Element a, Element b) const noexcept { return (up_[a * words_ + b / 64] >> (b % 64)) & 1U; }
  Element meet(Element a, Element b) const noexcept { return meet_[a * size() + b]; }
  Element join(Element a, Element b) const noexcept { return join_[a * size() + b]; }

  const std::string& name(Element x) const { return names_[x]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Element> find(std::string_view name) const;
  /// Throws UnknownElement when the name is not declared.
  Element index_of(std::string_view name) const;

  const std::vector<Element>& upper_covers(Element x) const { return upper_[x]; }
  const std::vector<Element>& lower_covers(Element x) const { return lower_[x]; }
  /// Hasse diagram, sorted by (lower, upper).
  std::vector<Cover> covers() const;

  /// Length of the longest chain from the bottom to `x`.
  std::size_t height(Element x) const { return height_[x]; }
  /// Elements sorted so that `x < y` implies `x` comes first.
  const std::vector<Element>& linear_extension() const noexcept { return linear_; }

  /// Copy of this lattice with new element names (same order structure).
  FiniteLattice renamed(std::vector<std::string> names) const;

 private:
  friend FiniteLattice chain(std::size_t n);
  friend FiniteLattice powerset(std::size_t n, std::size_t size_cap);
  friend FiniteLattice product(const FiniteLattice& x, const FiniteLattice& y, std::size_t size_cap);

  FiniteLattice() = default;
  static FiniteLattice from_up_sets(std::vector<std::string> names, std::vector<std::uint64_t> up,
                                    std::size_t words);
  static FiniteLattice assemble(std::vector<std::string> names, std::vector<Element> meet, std::vector<Element> join,
                                Element bottom, Element top);
  void finish();

  std::vector<std::string> names_;
  std::unordered_map<std::string, Element> index_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> up_;  // row x: bit y set iff x <= y
  std::vector<Element> meet_;
  std::vector<Element> join_;
  Element bottom_ = 0;
  Element top_ = 0;
  std::vector<std::vector<Element>> upper_;
  std::vector<std::vector<Element>> lower_;
  std::vector<std::size_t> height_;
  std::vector<Element> linear_;
};

/// Structure-preserving map between bounded lattices.
struct LatticeMorphism {
  std::shared_ptr<const FiniteLattice> source;
  std::shared_ptr<const FiniteLattice> target;
  std::vector<Element> map;

  Element operator()(Element x) const { return map[x]; }
};

/// Describes the first violated law (bounds, then meet/join pairs), if any.
std::optional<std::string> morphism_violation(const LatticeMorphism& f);
bool is_morphism(const LatticeMorphism& f);
/// Bijective endomorphism.
bool is_automorphism(const LatticeMorphism& f);
LatticeMorphism identity_morphism(std::shared_ptr<const FiniteLattice> lattice);

/// Exhaustive triple check of associativity, commutativity, idempotency,
/// absorption and bounds. Returns a description of the first failure.
std::optional<std::string> lattice_law_violation(const FiniteLattice& lat);

bool is_distributive(const FiniteLattice& lat);
bool is_complemented(const FiniteLattice& lat);
inline bool is_boolean(const FiniteLattice& lat) { return is_distributive(lat) && is_complemented(lat); }
/// Unique complement in a distributive lattice; nullopt when none exists.
std::optional<Element> complement(const FiniteLattice& lat, Element x);
std::vector<Element> atoms(const FiniteLattice& lat);

/// 0 <= 1 <= ... <= n.
FiniteLattice chain(std::size_t n);
/// Subsets of an n-element set ordered by inclusion. Element index is the subset bitmask.
FiniteLattice powerset(std::size_t n, std::size_t size_cap = kDefaultSizeCap);
/// Coordinate-wise product. Element (i, j) has index i * |y| + j.
FiniteLattice product(const FiniteLattice& x, const FiniteLattice& y, std::size_t size_cap = kDefaultSizeCap);

/// Projection of `product(*x, *y)` onto its first (`which == 0`) or second factor.
LatticeMorphism product_projection(std::shared_ptr<const FiniteLattice> prod, std::shared_ptr<const FiniteLattice> x,
                                   std::shared_ptr<const FiniteLattice> y, int which);

}  // namespace measlat
