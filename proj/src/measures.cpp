#include "measlat/measures.hpp"

#include <algorithm>
#include <numeric>

#include "measlat/error.hpp"
#include "measlat/inclusion_exclusion.hpp"

namespace measlat {

UniversalMeasure universal_measure(const FiniteLattice& lat) {
  UniversalMeasure um;
  um.spectrum = enumerate_points(lat);
  um.element_names = lat.names();
  const std::size_t n = um.rank();
  um.table.assign(lat.size(), std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (Element x = 0; x < lat.size(); ++x) um.table[x][i] = um.spectrum.points[i](x) ? 1 : 0;

  for (std::size_t i = 0; i < n; ++i) {
    if (um.table[lat.bottom()][i] != 0 || um.table[lat.top()][i] != 1)
      throw std::logic_error("universal measure does not preserve the bounds");
  }
  for (Element x = 0; x < lat.size(); ++x)
    for (Element y = x + 1; y < lat.size(); ++y)
      for (std::size_t i = 0; i < n; ++i)
        if (um.table[lat.meet(x, y)][i] != um.table[x][i] * um.table[y][i])
          throw std::logic_error("universal measure does not turn meets into products");
  return um;
}

Measure make_measure(const UniversalMeasure& um, const std::vector<Rational>& coefficients) {
  if (coefficients.size() != um.rank()) {
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(um.rank()) + " coefficients, got " +
                                                  std::to_string(coefficients.size()));
  }
  Measure m;
  m.coefficients = coefficients;
  m.values.assign(um.table.size(), Rational(0));
  for (std::size_t x = 0; x < um.table.size(); ++x)
    for (std::size_t i = 0; i < um.rank(); ++i)
      if (um.table[x][i] != 0) m.values[x] += coefficients[i];
  return m;
}

MeasureVerdict check_measure(const FiniteLattice& lat, const std::vector<Rational>& values,
                             std::optional<std::size_t> max_subset_size, bool normalized) {
  if (values.size() != lat.size()) throw Error(ErrorKind::DimensionMismatch, "one value per element is required");
  if (normalized && values[lat.bottom()] != 0) return MeasureVerdict{false, {}, "value at the bottom is not 0"};
  MeasureVerdict verdict;
  for_each_subset(lat.size(), 2, max_subset_size.value_or(lat.size()), [&](std::span<const Element> s) {
    Rational total = 0;
    for (auto [x, c] : inclusion_exclusion_row(lat, s)) total += c * values[x];
    if (total == 0) return true;
    verdict.ok = false;
    verdict.witness.assign(s.begin(), s.end());
    std::string names;
    for (Element x : s) names += (names.empty() ? "" : ", ") + lat.name(x);
    verdict.reason = "inclusion-exclusion fails for {" + names + "}";
    return false;
  });
  return verdict;
}

std::vector<Rational> solve_membership(const UniversalMeasure& um, const std::vector<Rational>& values) {
  if (values.size() != um.table.size()) throw Error(ErrorKind::DimensionMismatch, "one value per element is required");
  ExactMatrix a(um.table.size(), um.rank());
  for (std::size_t x = 0; x < um.table.size(); ++x)
    for (std::size_t i = 0; i < um.rank(); ++i) a(x, i) = um.table[x][i];
  auto result = solve(a, values);
  if (!result.solution) {
    throw Error(ErrorKind::NotAMeasure,
                "not a measure: residual is nonzero at element '" + um.element_names[result.inconsistent_row] + "'");
  }
  return std::move(*result.solution);
}

InvariantMeasureSpace invariant_space(const UniversalMeasure& um, const FiniteLattice& lat,
                                      const std::vector<LatticeMorphism>& generators) {
  const std::size_t n = um.rank();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (const auto& g : generators) {
    const auto sigma = point_action(lat, g, um.spectrum);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t a = root(i), b = root(sigma[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  InvariantMeasureSpace space;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = root(i);
    if (slot[r] == n) {
      slot[r] = space.orbits.size();
      space.orbits.emplace_back();
    }
    space.orbits[slot[r]].push_back(i);
  }
  space.dimension = space.orbits.size();
  for (const auto& orbit : space.orbits) {
    std::vector<Rational> v(n, Rational(0));
    for (std::size_t i : orbit) v[i] = 1;
    space.basis.push_back(std::move(v));
  }
  return space;
}

ExactMatrix invariant_constraint_matrix(const FiniteLattice& lat, const std::vector<LatticeMorphism>& generators) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : generators) {
    for (Element x = 0; x < lat.size(); ++x) {
      if (g(x) == x) continue;
      std::vector<Rational> row(lat.size(), Rational(0));
      row[g(x)] += 1;
      row[x] -= 1;
      rows.push_back(std::move(row));
    }
  }
  return constraint_matrix(lat).stacked(ExactMatrix::from_rows(rows, lat.size()));
}

std::vector<std::vector<int>> orthogonalize(const UniversalMeasure& um, const std::vector<Element>& xs) {
  const std::size_t n = um.rank();
  std::vector<int> complement_product(n, 1);  // (1 - x_1) ... (1 - x_i)
  std::vector<std::vector<int>> ys;
  ys.reserve(xs.size());
  for (Element x : xs) {
    if (x >= um.table.size()) throw Error(ErrorKind::UnknownElement, "element index out of range");
    std::vector<int> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = um.table[x][i] * complement_product[i];
      complement_product[i] *= 1 - um.table[x][i];
    }
    ys.push_back(std::move(y));
  }
  return ys;
}

NNSplit nn_split(const FiniteLattice& lat, const std::vector<Rational>& values,
                 std::optional<std::size_t> max_subset_size) {
  const MeasureVerdict verdict = check_measure(lat, values, max_subset_size, false);
  if (!verdict.ok) throw Error(ErrorKind::NotANNMeasure, verdict.reason);
  const Rational constant = values[lat.bottom()];
  std::vector<Rational> shifted(values.size());
  for (std::size_t x = 0; x < values.size(); ++x) shifted[x] = values[x] - constant;
  const UniversalMeasure um = universal_measure(lat);
  return NNSplit{make_measure(um, solve_membership(um, shifted)), constant};
}

}  // namespace measlat
