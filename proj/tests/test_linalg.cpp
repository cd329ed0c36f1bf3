#include <doctest.h>

#include <random>

#include "oracles.hpp"

using namespace measlat;

namespace {

ExactMatrix integer_matrix(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return ExactMatrix::from_rows(r, rows.empty() ? 0 : rows[0].size());
}

std::vector<std::vector<Rational>> rows_of(const ExactMatrix& m) {
  std::vector<std::vector<Rational>> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
  return out;
}

}  // namespace

TEST_CASE("constraint matrix examples") {
  // chain(2) with pair rows only: every pair row is trivial and dropped.
  const auto c = constraint_matrix(chain(2), 2);
  CHECK(c.rows() == 1);
  CHECK(nullspace_dimension(c) == 2);

  const auto m2 = constraint_matrix(named("m2").lattice);
  CHECK(m2.rows() == 2);
  CHECK(nullspace_dimension(m2) == 2);

  CHECK(nullspace_dimension(constraint_matrix(named("m3").lattice)) == 0);
  // Pairs alone leave ν(x1) = ν(x2) = ν(x3) = ν(1) / 2 free; the triple kills it.
  CHECK(nullspace_dimension(constraint_matrix(named("m3").lattice, 2)) == 1);
  CHECK(nullspace_dimension(constraint_matrix(named("n5").lattice)) == 2);
  CHECK_THROWS_AS(constraint_matrix(chain(20)), Error);
  CHECK(constraint_matrix(chain(20), 2).cols() == 21);
}

TEST_CASE("rank against naive elimination") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> entry(-3, 3), dim(1, 7);
  for (int t = 0; t < 200; ++t) {
    const int r = dim(rng), c = dim(rng);
    std::vector<std::vector<int>> rows(r, std::vector<int>(c));
    for (auto& row : rows)
      for (auto& v : row) v = entry(rng) * (entry(rng) > 0);
    const auto m = integer_matrix(rows);
    const auto expected = oracle::rank(rows_of(m));
    REQUIRE(rank(m) == expected);
    CHECK(nullspace_dimension(m) == m.cols() - expected);

    std::vector<std::size_t> rp(r), cp(c);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    CHECK(rank(m.permuted(rp, cp)) == expected);

    const auto basis = nullspace_basis(m);
    REQUIRE(basis.size() == m.cols() - expected);
    for (const auto& v : basis)
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational dot = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) dot += m(i, j) * v[j];
        REQUIRE(dot == 0);
      }
    CHECK(oracle::rank(basis) == basis.size());

    const auto snf = smith_normal_form(m);
    CHECK(snf.rank == expected);
    for (std::size_t i = 1; i < snf.diagonal.size(); ++i) CHECK(snf.diagonal[i] % snf.diagonal[i - 1] == 0);
  }
}

TEST_CASE("rational entries") {
  const auto m = ExactMatrix::from_rows({{Rational(1, 2), Rational(1, 3)}, {Rational(3, 2), 1}}, 2);
  CHECK_FALSE(m.is_integer());
  CHECK(rank(m) == 1);
  CHECK_THROWS_AS(smith_normal_form(m), Error);
}

TEST_CASE("Smith normal form examples") {
  const auto id = smith_normal_form(integer_matrix({{1, 0}, {0, 1}}));
  CHECK(id.diagonal == std::vector<Integer>{1, 1});
  CHECK(id.torsion_free());

  const auto d = smith_normal_form(integer_matrix({{2, 0}, {0, 0}}));
  CHECK(d.rank == 1);
  CHECK(d.diagonal == std::vector<Integer>{2});
  CHECK_FALSE(d.torsion_free());

  const auto w = smith_normal_form(integer_matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  CHECK(w.diagonal == std::vector<Integer>{2, 6, 12});

  const auto z = smith_normal_form(integer_matrix({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
  CHECK(z.rank == 0);
  CHECK(nullspace_dimension(integer_matrix({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}})) == 3);
}

TEST_CASE("constraint matrices are torsion-free and match the points") {
  for (const auto& lat : oracle::small_catalog(6)) {
    const auto m = constraint_matrix(lat);
    CHECK(m.is_integer());
    CHECK(smith_normal_form(m).torsion_free());
    CHECK(oracle::rank(rows_of(m)) == lat.size() - measurability(lat));
    // Truncating to pairs can only enlarge the solution space.
    if (lat.size() >= 2) CHECK(nullspace_dimension(constraint_matrix(lat, 2)) >= measurability(lat));
  }
}

TEST_CASE("exact solve") {
  const auto m = integer_matrix({{1, 1}, {1, -1}, {2, 0}});
  auto ok = solve(m, {Rational(3), Rational(1), Rational(4)});
  REQUIRE(ok.solution.has_value());
  CHECK((*ok.solution)[0] == 2);
  CHECK((*ok.solution)[1] == 1);
  auto bad = solve(m, {Rational(3), Rational(1), Rational(5)});
  CHECK_FALSE(bad.solution.has_value());
  CHECK(bad.inconsistent_row == 2);
}

TEST_CASE("TSV export") {
  const auto tsv = to_tsv(ExactMatrix::from_rows({{1, Rational(-1, 2)}}, 2));
  CHECK(tsv == "1\t-1/2\n");
}
