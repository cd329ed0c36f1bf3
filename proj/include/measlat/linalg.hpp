#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "measlat/lattice.hpp"

namespace measlat {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline constexpr std::size_t kDefaultRowCap = std::size_t{1} << 17;

/// Dense matrix of exact rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<Rational> row(std::size_t r) const;

  bool is_integer() const;
  /// Rows stacked below this matrix's rows; column counts must agree.
  ExactMatrix stacked(const ExactMatrix& below) const;
  ExactMatrix permuted(const std::vector<std::size_t>& row_order, const std::vector<std::size_t>& col_order) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Elementary divisors d1 | d2 | ... | d_rank (all positive).
struct SmithForm {
  std::vector<Integer> diagonal;
  std::size_t rank = 0;

  bool torsion_free() const;
};

/// Inclusion-exclusion relations J: one column per element, one row per
/// distinct-element subset of size 2..max_subset_size (ordered by size, then
/// lexicographically), plus the row nu(0_X) = 0 first. Zero and duplicate rows
/// are dropped. Throws SizeCapExceeded if more than `row_cap` subsets would be
/// enumerated.
ExactMatrix constraint_matrix(const FiniteLattice& lat, std::optional<std::size_t> max_subset_size = std::nullopt,
                              std::size_t row_cap = kDefaultRowCap);

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(const ExactMatrix& m);
std::size_t nullspace_dimension(const ExactMatrix& m);
/// Basis of {v : m v = 0} from the reduced row echelon form.
std::vector<std::vector<Rational>> nullspace_basis(const ExactMatrix& m);

/// Throws NonIntegerEntry if any entry is not an integer.
SmithForm smith_normal_form(const ExactMatrix& m);

struct SolveResult {
  std::optional<std::vector<Rational>> solution;  // free variables set to 0
  std::size_t inconsistent_row = 0;               // first row with nonzero residual when unsolvable
};

/// Solves m x = b exactly.
SolveResult solve(const ExactMatrix& m, const std::vector<Rational>& b);

/// Tab-separated rows; rationals print as p/q.
std::string to_tsv(const ExactMatrix& m);

}  // namespace measlat
