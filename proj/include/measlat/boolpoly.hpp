#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace measlat {

/// Square-free monomial over GF(2): a set of variable indices.
///
/// Ordered by degree-reverse-lexicographic order with x0 > x1 > ... :
/// higher degree wins; at equal degree, the monomial containing the
/// highest-indexed differing variable is smaller.
class BoolMonomial {
 public:
  static constexpr std::size_t kMaxVariables = 256;

  BoolMonomial() = default;
  static BoolMonomial variable(std::size_t v);
  static BoolMonomial from_variables(const std::vector<std::size_t>& vars);

  std::size_t degree() const noexcept;
  bool is_one() const noexcept { return bits_ == Bits{}; }
  bool contains(std::size_t v) const noexcept { return (bits_[v / 64] >> (v % 64)) & 1U; }
  std::vector<std::size_t> variables() const;

  /// Subset test: this monomial divides `other`.
  bool divides(const BoolMonomial& other) const noexcept;
  bool coprime(const BoolMonomial& other) const noexcept;
  /// Product (= least common multiple, since x^2 = x).
  BoolMonomial operator*(const BoolMonomial& other) const noexcept;
  /// Variables of this monomial that are not in `other`.
  BoolMonomial without(const BoolMonomial& other) const noexcept;
  BoolMonomial with(std::size_t v) const noexcept;

  friend bool operator==(const BoolMonomial&, const BoolMonomial&) = default;
  friend std::strong_ordering operator<=>(const BoolMonomial& a, const BoolMonomial& b) noexcept;

  std::size_t hash() const noexcept;

 private:
  using Bits = std::array<std::uint64_t, kMaxVariables / 64>;
  Bits bits_{};
};

/// Polynomial over GF(2) in square-free monomials; terms kept strictly
/// decreasing, so `terms().front()` is the leading monomial.
class BoolPoly {
 public:
  BoolPoly() = default;
  explicit BoolPoly(BoolMonomial m) : terms_{m} {}
  /// Sums the given monomials (pairs cancel).
  static BoolPoly from_terms(std::vector<BoolMonomial> terms);
  static BoolPoly one() { return BoolPoly(BoolMonomial{}); }
  static BoolPoly variable(std::size_t v) { return BoolPoly(BoolMonomial::variable(v)); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const noexcept { return terms_.size() == 1 && terms_[0].is_one(); }
  const BoolMonomial& leading() const { return terms_.front(); }
  const std::vector<BoolMonomial>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  BoolPoly operator+(const BoolPoly& other) const;
  BoolPoly& operator+=(const BoolPoly& other);
  BoolPoly operator*(const BoolPoly& other) const;
  BoolPoly operator*(const BoolMonomial& m) const;

  /// Value at an assignment of 0/1 to variables.
  bool evaluate(const std::vector<std::uint8_t>& assignment) const;

  /// Sorted monomial sum such as `a*b + c + 1`; `0` for the zero polynomial.
  /// Variable names starting with a digit are bracketed: `[1] + 1`.
  std::string to_string(const std::vector<std::string>& variable_names) const;

  friend bool operator==(const BoolPoly&, const BoolPoly&) = default;
  friend auto operator<=>(const BoolPoly& a, const BoolPoly& b) { return a.terms_ <=> b.terms_; }

 private:
  static void normalize(std::vector<BoolMonomial>& terms);
  std::vector<BoolMonomial> terms_;
};

}  // namespace measlat
