#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "measlat/boolpoly.hpp"
#include "measlat/lattice.hpp"

namespace measlat {

/// Generators of the ideal I over GF(2), one variable per lattice element:
/// 0_X, 1_X + 1, (x^y) + xy and (xvy) + x + y + xy for every pair.
struct MeasureIdeal {
  std::size_t num_variables = 0;
  std::vector<BoolPoly> generators;
};

/// Reduced Groebner basis in degrevlex order, sorted by leading monomial.
struct GroebnerBasis {
  std::size_t num_variables = 0;
  std::vector<BoolPoly> basis;
  static constexpr const char* order = "degrevlex";

  bool is_unit() const { return basis.size() == 1 && basis.front().is_one(); }
  std::vector<BoolMonomial> leading_monomials() const;
};

MeasureIdeal build_ideal(const FiniteLattice& lat);

/// Buchberger's algorithm in the Boolean ring GF(2)[x]/(x^2 + x). Pairs are
/// chosen by the normal strategy (lowest lcm degree first); coprime leading
/// monomials and the chain criterion discard pairs.
GroebnerBasis buchberger(const MeasureIdeal& ideal);

/// Fully reduced remainder of `p` modulo `polys` (need not be a basis).
BoolPoly reduce(const BoolPoly& p, const std::vector<BoolPoly>& polys);

/// Unique remainder; zero iff `p` lies in the ideal.
BoolPoly normal_form(const BoolPoly& p, const GroebnerBasis& gb);

/// Monomials divisible by no leading monomial, ascending. Their number is the
/// GF(2)-dimension of the quotient ring. Throws CapExceeded beyond `cap`.
std::vector<BoolMonomial> standard_monomials(const GroebnerBasis& gb, std::size_t cap = std::size_t{1} << 20);

/// Random polynomial with up to `max_terms` monomials of degree <= `max_degree`.
BoolPoly random_polynomial(std::mt19937_64& rng, std::size_t num_variables, std::size_t max_terms = 6,
                           std::size_t max_degree = 3);

struct BooleanRingCheck {
  bool ok = true;
  std::optional<BoolPoly> witness;
};

/// Checks normal_form(p*p) == normal_form(p) on `trials` seeded random polynomials.
BooleanRingCheck is_boolean_ring(const GroebnerBasis& gb, std::size_t trials, std::uint64_t seed);

/// Measurability via standard monomials.
std::size_t groebner_measurability(const FiniteLattice& lat);

}  // namespace measlat
