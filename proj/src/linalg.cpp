#include "measlat/linalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "measlat/error.hpp"
#include "measlat/inclusion_exclusion.hpp"

namespace measlat {

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  ExactMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Rational> ExactMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

bool ExactMatrix::is_integer() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return denominator(q) == 1; });
}

ExactMatrix ExactMatrix::stacked(const ExactMatrix& below) const {
  if (below.cols_ != cols_ && below.rows_ != 0 && rows_ != 0)
    throw Error(ErrorKind::DimensionMismatch, "stacked matrices need equal column counts");
  ExactMatrix m(rows_ + below.rows_, rows_ != 0 ? cols_ : below.cols_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return m;
}

ExactMatrix ExactMatrix::permuted(const std::vector<std::size_t>& row_order,
                                  const std::vector<std::size_t>& col_order) const {
  ExactMatrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(row_order[r], col_order[c]);
  return m;
}

bool SmithForm::torsion_free() const {
  return std::all_of(diagonal.begin(), diagonal.end(), [](const Integer& d) { return d == 1; });
}

ExactMatrix constraint_matrix(const FiniteLattice& lat, std::optional<std::size_t> max_subset_size,
                              std::size_t row_cap) {
  const std::size_t n = lat.size();
  const std::size_t max_k = max_subset_size.value_or(n);
  if (subset_count(n, 2, max_k) > row_cap) {
    throw Error(ErrorKind::SizeCapExceeded, "constraint system would exceed " + std::to_string(row_cap) + " rows; lower the maximum subset size");
  }
  std::vector<SparseRow> rows;
  std::set<SparseRow> seen;
  auto keep = [&](SparseRow row) {
    if (!row.empty() && seen.insert(row).second) rows.push_back(std::move(row));
  };
  keep(SparseRow{{lat.bottom(), 1}});
  for_each_subset(n, 2, max_k, [&](std::span<const Element> s) {
    keep(inclusion_exclusion_row(lat, s));
    return true;
  });

  ExactMatrix m(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (auto [x, c] : rows[r]) m(r, x) = c;
  return m;
}

namespace {

using IntRows = std::vector<std::vector<Integer>>;

IntRows scaled_integer_rows(const ExactMatrix& m) {
  IntRows rows(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer scale = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) scale = lcm(scale, denominator(m(r, c)));
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = numerator(m(r, c)) * (scale / denominator(m(r, c)));
  }
  return rows;
}

}  // namespace

std::size_t rank(const ExactMatrix& m) {
  IntRows a = scaled_integer_rows(m);
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::size_t nullspace_dimension(const ExactMatrix& m) { return m.cols() - rank(m); }

namespace {

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < a[r].size(); ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<Rational>> nullspace_basis(const ExactMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) a[r] = m.row(r);
  const auto pivots = rref(a, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

SmithForm smith_normal_form(const ExactMatrix& m) {
  if (!m.is_integer()) throw Error(ErrorKind::NonIntegerEntry, "Smith normal form needs an integer matrix");
  const std::size_t rows = m.rows(), cols = m.cols();
  IntRows a(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = numerator(m(r, c));

  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
  };
  // Moves the least nonzero |entry| of row t / column t (or of the whole
  // trailing block when `whole` is set) to (t, t). False if all are zero.
  auto place_pivot = [&](std::size_t t, bool whole) {
    std::size_t br = rows, bc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (!whole && i != t && j != t) continue;
        if (a[i][j] == 0) continue;
        if (br == rows || abs(a[i][j]) < abs(a[br][bc])) {
          br = i;
          bc = j;
        }
      }
    if (br == rows) return false;
    std::swap(a[t], a[br]);
    swap_cols(t, bc);
    return true;
  };

  SmithForm form;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    if (!place_pivot(t, true)) break;
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const Integer q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        clean = clean && a[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const Integer q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        clean = clean && a[t][j] == 0;
      }
      if (!clean) {
        place_pivot(t, false);
        continue;
      }
      // Divisibility: fold a row with a non-multiple entry into row t.
      std::size_t offender = rows;
      for (std::size_t i = t + 1; i < rows && offender == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            offender = i;
            break;
          }
      if (offender == rows) break;
      for (std::size_t j = t; j < cols; ++j) a[t][j] += a[offender][j];
    }
    form.diagonal.push_back(abs(a[t][t]));
    ++form.rank;
  }
  return form;
}

SolveResult solve(const ExactMatrix& m, const std::vector<Rational>& b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side has the wrong length");
  const std::size_t cols = m.cols();
  // Augmented RREF; a row [0 ... 0 | nonzero] means no solution.
  std::vector<std::vector<Rational>> a(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    a[r] = m.row(r);
    a[r].push_back(b[r]);
  }
  const auto pivots = rref(a, cols);
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];

  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational residual = -b[r];
    for (std::size_t c = 0; c < cols; ++c)
      if (m(r, c) != 0) residual += m(r, c) * x[c];
    if (residual != 0) return SolveResult{std::nullopt, r};
  }
  return SolveResult{std::move(x), 0};
}

std::string to_tsv(const ExactMatrix& m) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? "\t" : "") << m(r, c);
    out << '\n';
  }
  return out.str();
}

}  // namespace measlat
