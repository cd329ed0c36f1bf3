#include <doctest.h>

#include <random>

#include "oracles.hpp"

using namespace measlat;

TEST_CASE("named entries carry their expected measurability") {
  for (const auto& name : fixed_names()) {
    const auto e = named(name);
    REQUIRE(e.expected_n.has_value());
    CHECK(measurability(e.lattice) == *e.expected_n);
  }
  CHECK(named("m3").expected_n == 0u);
  CHECK(named("chain(5)").expected_n == 5u);
  CHECK(named("hexagon9").expected_n == 2u);
  CHECK(named("powerset(2)").lattice.size() == 4);
  for (const char* bad : {"m4", "chain()", "chain(x)", "chain(3", "powerset(-1)"}) {
    try {
      named(bad);
      FAIL("expected UnknownName");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnknownName);
    }
  }
}

TEST_CASE("enumeration counts agree with a brute-force enumeration") {
  const std::vector<std::size_t> counts{0, 1, 1, 1, 2, 5, 15, 53, 222};
  for (std::size_t s = 0; s <= 8; ++s) CHECK(enumerate_all(s).size() == counts[s]);
  for (std::size_t s = 1; s <= 6; ++s) {
    const auto ours = enumerate_all(s);
    const auto theirs = oracle::lattices(s);
    REQUIRE(ours.size() == theirs.size());
    for (const auto& t : theirs)
      CHECK(std::count_if(ours.begin(), ours.end(), [&](const FiniteLattice& o) { return oracle::isomorphic(o, t); }) ==
            1);
  }
  CHECK_THROWS_AS(enumerate_all(9), Error);
}

TEST_CASE("enumeration is deterministic and sorted") {
  const auto a = enumerate_all(6), b = enumerate_all(6);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].covers() == b[i].covers());
    CHECK_FALSE(lattice_law_violation(a[i]).has_value());
    if (i) CHECK(canonical_form(a[i - 1]) < canonical_form(a[i]));
  }
}

TEST_CASE("table against the reference multisets") {
  const auto rows = table(6);
  CHECK(rows.size() == 25);
  CHECK(multisets(rows) == reference_multisets());
  const auto& ref = reference_multisets();
  CHECK(ref.at(4) == std::vector<std::size_t>{2, 3});
  CHECK(ref.at(5) == std::vector<std::size_t>{0, 2, 3, 3, 4});
  CHECK(ref.at(6).size() == 15);
}

TEST_CASE("random lattices") {
  std::mt19937_64 a(99), b(99);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_lattice(a, 10), y = random_lattice(b, 10);
    CHECK(x.size() <= 10);
    CHECK(x.covers() == y.covers());
    CHECK_FALSE(lattice_law_violation(x).has_value());
  }
}
