#include <doctest.h>

#include <random>

#include "oracles.hpp"

using namespace measlat;

namespace {

FiniteLattice shuffled(const FiniteLattice& lat, std::mt19937_64& rng) {
  std::vector<Element> perm(lat.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> names(lat.size());
  for (Element x = 0; x < lat.size(); ++x) names[perm[x]] = "v" + std::to_string(x);
  std::vector<FiniteLattice::Cover> rel;
  for (auto [a, b] : lat.covers()) rel.emplace_back(perm[a], perm[b]);
  return FiniteLattice::from_relation(names, rel);
}

}  // namespace

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(5);
  auto lattices = oracle::small_catalog(6);
  lattices.push_back(named("x7").lattice);
  lattices.push_back(powerset(3));
  for (const auto& lat : lattices) {
    const auto form = canonical_form(lat);
    for (int i = 0; i < 4; ++i) {
      const auto other = shuffled(lat, rng);
      CHECK(canonical_form(other) == form);
      const auto iso = find_isomorphism(lat, other);
      REQUIRE(iso.has_value());
      for (Element a = 0; a < lat.size(); ++a)
        for (Element b = 0; b < lat.size(); ++b) REQUIRE(lat.leq(a, b) == other.leq((*iso)[a], (*iso)[b]));
    }
  }
}

TEST_CASE("canonical form separates exactly the brute-force isomorphism classes") {
  const auto lattices = oracle::small_catalog(6);
  for (std::size_t i = 0; i < lattices.size(); ++i)
    for (std::size_t j = i + 1; j < lattices.size(); ++j) {
      const bool same = canonical_form(lattices[i]) == canonical_form(lattices[j]);
      CHECK(same == oracle::isomorphic(lattices[i], lattices[j]));
    }
  CHECK(are_isomorphic(named("n5").lattice, named("n5").lattice));
  CHECK_FALSE(are_isomorphic(named("n5").lattice, named("m3").lattice));
  CHECK_FALSE(find_isomorphism(chain(3), powerset(2)).has_value());
}

TEST_CASE("canonical id format") {
  CHECK(canonical_form(chain(0)).id() == "1:");
  CHECK(canonical_form(chain(1)).id().rfind("2:", 0) == 0);
}
