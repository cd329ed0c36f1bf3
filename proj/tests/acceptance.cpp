// Acceptance checks: prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "oracles.hpp"

using namespace measlat;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first failure; later `expect` calls are ignored once one has failed.
class Checker {
 public:
  bool expect(bool cond, const std::string& what) {
    if (!cond && ok_) {
      ok_ = false;
      detail_ = what;
    }
    return cond;
  }
  void note(std::string d) {
    if (ok_) detail_ = std::move(d);
  }
  Outcome done() const { return {ok_, detail_}; }

 private:
  bool ok_ = true;
  std::string detail_;
};

std::vector<FiniteLattice> catalog25() { return oracle::small_catalog(6); }

std::string label(const FiniteLattice& lat) { return canonical_form(lat).id(); }

Outcome table_reproduction() {
  Checker c;
  const auto rows = table(6);
  c.expect(rows.size() == 25, "expected 25 lattices, got " + std::to_string(rows.size()));
  const MeasurabilityMultisets expected{{1, {0}},          {2, {1}},
                                        {3, {2}},          {4, {2, 3}},
                                        {5, {0, 2, 3, 3, 4}}, {6, {0, 0, 1, 1, 1, 1, 2, 2, 3, 3, 3, 4, 4, 4, 5}}};
  const auto got = multisets(rows);
  c.expect(got == expected, "per-size multisets differ");
  c.expect(reference_multisets() == expected, "stored reference table differs");
  c.note("25 lattices, multisets match for sizes 1-6");
  return c.done();
}

Outcome oracle_triangle() {
  Checker c;
  auto lattices = catalog25();
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 200; ++i) lattices.push_back(random_lattice(rng, 10));
  std::size_t max_size = 0;
  for (const auto& lat : lattices) {
    const std::size_t p = measurability(lat);
    const std::size_t g = standard_monomials(buchberger(build_ideal(lat))).size();
    const std::size_t q = nullspace_dimension(constraint_matrix(lat));
    max_size = std::max(max_size, lat.size());
    if (!c.expect(p == g && g == q, label(lat) + ": points=" + std::to_string(p) + " groebner=" + std::to_string(g) +
                                        " nullspace=" + std::to_string(q)))
      break;
  }
  c.note(std::to_string(lattices.size()) + " lattices (largest " + std::to_string(max_size) + " elements)");
  return c.done();
}

Outcome named_values() {
  Checker c;
  auto all_three = [&](const FiniteLattice& lat, std::size_t expected, const std::string& name) {
    const std::size_t p = measurability(lat);
    const std::size_t g = groebner_measurability(lat);
    const std::size_t q = nullspace_dimension(constraint_matrix(lat));
    c.expect(p == expected && g == expected && q == expected,
             name + ": expected " + std::to_string(expected) + ", got " + std::to_string(p) + "/" + std::to_string(g) +
                 "/" + std::to_string(q));
  };
  all_three(named("m3").lattice, 0, "m3");
  all_three(named("n5").lattice, 2, "n5");
  all_three(named("m2").lattice, 2, "m2");
  for (std::size_t k = 0; k <= 10; ++k) all_three(chain(k), k, "chain(" + std::to_string(k) + ")");
  for (std::size_t k = 0; k <= 4; ++k) all_three(powerset(k), k, "powerset(" + std::to_string(k) + ")");
  all_three(named("hexagon9").lattice, 2, "hexagon9");
  all_three(named("x7").lattice, 2, "x7");
  c.note("m3, n5, m2, chain(0..10), powerset(0..4), hexagon9, x7 by all three methods");
  return c.done();
}

Outcome product_additivity() {
  Checker c;
  const auto small = oracle::small_catalog(4);
  std::size_t pairs = 0;
  for (const auto& a : small)
    for (const auto& b : small) {
      const auto p = product(a, b);
      c.expect(measurability(p) == measurability(a) + measurability(b), label(a) + " x " + label(b));
      c.expect(groebner_measurability(p) == measurability(a) + measurability(b), label(a) + " x " + label(b));
      ++pairs;
    }
  // The six-element product of 0 <= 1 and 0 <= 1 <= 2: 3 = 1 + 2.
  const auto inst = product(chain(1), chain(2));
  c.expect(measurability(inst) == 3 && groebner_measurability(inst) == 3, "chain(1) x chain(2) should have n = 3");
  const auto rows = table(6);
  const auto id = canonical_form(inst).id();
  c.expect(std::any_of(rows.begin(), rows.end(), [&](const TableRow& r) { return r.canonical_id == id && r.n == 3; }),
           "chain(1) x chain(2) is missing from the six-element table");
  c.note(std::to_string(pairs) + " pairs plus chain(1) x chain(2) = 1 + 2");
  return c.done();
}

Outcome torsion_freeness() {
  Checker c;
  for (const auto& lat : catalog25()) {
    const auto snf = smith_normal_form(constraint_matrix(lat));
    c.expect(snf.torsion_free(), label(lat) + " has a nontrivial elementary divisor");
    c.expect(lat.size() - snf.rank == measurability(lat), label(lat) + ": cokernel rank differs from n");
  }
  c.note("all nonzero elementary divisors equal 1 on 25 lattices");
  return c.done();
}

Outcome measure_space() {
  Checker c;
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
  auto q = [&] { return Rational(num(rng), den(rng)); };
  std::size_t cases = 0;
  for (const auto& lat : catalog25()) {
    const auto um = universal_measure(lat);
    const auto kernel = nullspace_basis(constraint_matrix(lat));
    for (int t = 0; t < 100; ++t, ++cases) {
      std::vector<Rational> coeffs(um.rank());
      for (auto& x : coeffs) x = q();
      const auto nu = make_measure(um, coeffs);
      c.expect(check_measure(lat, nu.values).ok, label(lat) + ": make_measure output fails the check");
      c.expect(solve_membership(um, nu.values) == coeffs, label(lat) + ": coefficients do not round-trip");

      // A map built only from the inclusion-exclusion system, never from points.
      std::vector<Rational> v(lat.size(), 0);
      for (const auto& b : kernel) {
        const Rational s = q();
        for (std::size_t x = 0; x < v.size(); ++x) v[x] += s * b[x];
      }
      c.expect(check_measure(lat, v).ok, label(lat) + ": kernel combination fails the check");
      try {
        solve_membership(um, v);
      } catch (const Error&) {
        c.expect(false, label(lat) + ": valid map outside the span of points");
      }

      // An arbitrary map is a measure exactly when it lies in the span.
      std::vector<Rational> w(lat.size());
      for (auto& x : w) x = (t % 2 == 0) ? q() : Rational(num(rng) % 2);
      w[lat.bottom()] = 0;
      bool in_span = true;
      try {
        solve_membership(um, w);
      } catch (const Error&) {
        in_span = false;
      }
      c.expect(check_measure(lat, w).ok == in_span, label(lat) + ": check_measure and span membership disagree");
    }
  }
  c.note(std::to_string(cases) + " seeded cases");
  return c.done();
}

Outcome orthogonal_idempotents() {
  Checker c;
  std::mt19937_64 rng(7);
  auto lattices = catalog25();
  for (const auto& name : fixed_names()) lattices.push_back(named(name).lattice);
  std::size_t sequences = 0;
  for (const auto& lat : lattices) {
    const auto um = universal_measure(lat);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(lat.size() - 1));
    std::uniform_int_distribution<int> length(1, 6);
    for (int t = 0; t < 100; ++t, ++sequences) {
      std::vector<Element> xs(length(rng));
      for (auto& x : xs) x = pick(rng);
      const auto ys = orthogonalize(um, xs);
      std::vector<int> support_x(um.rank(), 0), support_y(um.rank(), 0);
      for (std::size_t i = 0; i < ys.size(); ++i) {
        for (std::size_t k = 0; k < um.rank(); ++k) {
          c.expect(ys[i][k] * ys[i][k] == ys[i][k], "y is not idempotent");
          for (std::size_t j = 0; j < i; ++j) c.expect(ys[i][k] * ys[j][k] == 0, "y_i y_j != 0");
          support_x[k] |= um(xs[i])[k] != 0;
          support_y[k] |= ys[i][k] != 0;
        }
        c.expect(support_x == support_y, label(lat) + ": prefix ideals differ");
      }
    }
  }
  c.note(std::to_string(sequences) + " sequences on " + std::to_string(lattices.size()) + " lattices");
  return c.done();
}

Outcome boolean_hull() {
  Checker c;
  std::size_t spot = 0;
  for (const auto& lat : catalog25()) {
    const auto h = hull(lat);
    const auto gb = buchberger(build_ideal(lat));
    const auto violation = hull_violation(lat, h, &gb);
    c.expect(!violation, label(lat) + ": " + violation.value_or(""));
    c.expect(h.lattice && measurability(*h.lattice) == measurability(lat), label(lat) + ": hull measurability");
    if (lat.size() <= 5) {
      for (std::size_t k : {1, 2}) {
        const auto v = verify_universal_property(lat, powerset(k));
        c.expect(v.ok, label(lat) + " -> powerset(" + std::to_string(k) + "): " + v.reason);
        ++spot;
      }
    }
  }
  c.note("invariants on 25 lattices, " + std::to_string(spot) + " universal-property spot checks");
  return c.done();
}

Outcome boolean_ring() {
  Checker c;
  for (std::size_t k = 0; k <= 3; ++k) {
    const auto p = powerset(k);
    const auto v = boolean_ring_structure(p);
    c.expect(v.ok, "powerset(" + std::to_string(k) + "): " + v.reason);
    // Independent element-level check against normal forms.
    const auto gb = buchberger(build_ideal(p));
    for (Element a = 0; a < p.size(); ++a)
      for (Element b = 0; b < p.size(); ++b) {
        const Element sum = p.join(p.meet(a, *complement(p, b)), p.meet(*complement(p, a), b));
        c.expect(sum == (a ^ b), "lattice sum is not symmetric difference");
        const auto xa = BoolPoly::variable(a), xb = BoolPoly::variable(b);
        c.expect(normal_form(xa + xb, gb) == normal_form(BoolPoly::variable(sum), gb), "addition mismatch");
        c.expect(normal_form(xa * xb, gb) == normal_form(BoolPoly::variable(p.meet(a, b)), gb),
                 "multiplication mismatch");
      }
    c.expect(standard_monomials(gb).size() == k, "dimension of the quotient");
  }
  c.note("powerset(0..3), all element pairs");
  return c.done();
}

std::vector<LatticeMorphism> automorphisms(const std::shared_ptr<const FiniteLattice>& lat) {
  std::vector<LatticeMorphism> out;
  for (auto& f : enumerate_morphisms(*lat, *lat)) {
    LatticeMorphism g{lat, lat, std::move(f)};
    if (is_automorphism(g)) out.push_back(std::move(g));
  }
  return out;
}

Outcome invariant_measures() {
  Checker c;
  auto p3 = std::make_shared<const FiniteLattice>(powerset(3));
  const auto sym3 = automorphisms(p3);
  c.expect(sym3.size() == 6, "powerset(3) should have 6 automorphisms");
  const auto um = universal_measure(*p3);
  const auto space = invariant_space(um, *p3, sym3);
  c.expect(space.dimension == 1, "Sym(3) invariant dimension should be 1");
  if (space.basis.size() == 1) {
    const auto nu = make_measure(um, space.basis[0]);
    for (Element x = 0; x < p3->size(); ++x)
      c.expect(nu.values[x] == std::popcount(x), "invariant line is not spanned by cardinality");
  }

  std::vector<std::shared_ptr<const FiniteLattice>> pool;
  for (auto& lat : catalog25()) pool.push_back(std::make_shared<const FiniteLattice>(std::move(lat)));
  pool.push_back(p3);
  pool.push_back(std::make_shared<const FiniteLattice>(product(named("m3").lattice, chain(1))));
  pool.push_back(std::make_shared<const FiniteLattice>(product(named("m2").lattice, named("m2").lattice)));
  pool.push_back(std::make_shared<const FiniteLattice>(named("hexagon9").lattice));
  std::vector<std::shared_ptr<const FiniteLattice>> symmetric;
  for (const auto& lat : pool)
    if (automorphisms(lat).size() > 1) symmetric.push_back(lat);

  std::mt19937_64 rng(10);
  for (int t = 0; t < 20; ++t) {
    const auto& lat = symmetric[std::uniform_int_distribution<std::size_t>(0, symmetric.size() - 1)(rng)];
    const auto autos = automorphisms(lat);
    std::vector<LatticeMorphism> gens;
    for (const auto& g : autos)
      if (std::bernoulli_distribution(0.4)(rng)) gens.push_back(g);
    const auto s = invariant_space(universal_measure(*lat), *lat, gens);
    const auto check = nullspace_dimension(invariant_constraint_matrix(*lat, gens));
    c.expect(s.dimension == check, label(*lat) + ": orbit count " + std::to_string(s.dimension) +
                                       " vs augmented nullspace " + std::to_string(check));
  }
  c.note("Sym(3) gives the cardinality line; 20 seeded subgroup cases agree");
  return c.done();
}

Outcome reduced_ring() {
  Checker c;
  auto lattices = catalog25();
  for (const auto& name : fixed_names()) lattices.push_back(named(name).lattice);
  std::vector<GroebnerBasis> bases;
  std::vector<Spectrum> spectra;
  for (const auto& lat : lattices) {
    bases.push_back(buchberger(build_ideal(lat)));
    spectra.push_back(enumerate_points(lat));
  }
  std::mt19937_64 rng(11);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t i = t % lattices.size();
    const auto p = random_polynomial(rng, lattices[i].size());
    const auto nf = normal_form(p, bases[i]);
    c.expect(normal_form(p * p, bases[i]) == nf, "p^2 and p have different normal forms");
    c.expect(normal_form(nf * nf, bases[i]) == nf, "normal form is not idempotent");
    // Reducedness: a nonzero class is nonzero at some point.
    bool seen = nf.is_zero();
    for (const auto& pt : spectra[i].points) seen = seen || nf.evaluate(pt.values);
    c.expect(seen, "nonzero normal form vanishes at every point");
  }
  for (std::size_t i = 0; i < lattices.size(); ++i)
    c.expect(is_boolean_ring(bases[i], 20, i).ok, "is_boolean_ring reported a witness");
  c.note("1000 seeded polynomials on " + std::to_string(lattices.size()) + " lattices");
  return c.done();
}

Outcome bound() {
  Checker c;
  std::size_t tested = 0;
  auto check = [&](const FiniteLattice& lat) {
    if (lat.size() < 2) return;
    ++tested;
    c.expect(measurability(lat) <= lat.size() - 1, label(lat) + " exceeds |X| - 1");
  };
  for (std::size_t s = 1; s <= 8; ++s)
    for (const auto& lat : enumerate_all(s)) check(lat);
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) check(random_lattice(rng, 10));
  for (const auto& name : fixed_names()) check(named(name).lattice);
  c.expect(measurability(chain(1)) == 1, "chain(1) should attain the bound");
  c.note(std::to_string(tested) + " lattices; chain(1) attains n = |X| - 1 = 1");
  return c.done();
}

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0 = no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "measurability table of all lattices up to six elements", 10, table_reproduction},
      {2, "points = standard monomials = nullspace dimension", 60, oracle_triangle},
      {3, "named measurabilities", 0, named_values},
      {4, "product additivity", 5, product_additivity},
      {5, "torsion-free constraint matrices", 30, torsion_freeness},
      {6, "measure space is spanned by the universal measure", 0, measure_space},
      {7, "orthogonal idempotents", 0, orthogonal_idempotents},
      {8, "Boolean hull", 60, boolean_hull},
      {9, "Boolean ring structure of powersets", 0, boolean_ring},
      {10, "invariant measures", 0, invariant_measures},
      {11, "reduced Boolean ring over F2", 0, reduced_ring},
      {12, "n(X) <= |X| - 1", 0, bound},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = cr.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && cr.limit_seconds > 0 && seconds >= cr.limit_seconds) {
      std::ostringstream msg;
      msg << "took " << seconds << " s, limit " << cr.limit_seconds << " s";
      outcome = {false, msg.str()};
    }
    failures += !outcome.ok;
    std::cout << (outcome.ok ? "PASS" : "FAIL") << " criterion " << std::setw(2) << cr.id << ": " << cr.title << " ("
              << outcome.detail << ") [" << std::fixed << std::setprecision(2) << seconds << " s]\n";
  }
  std::cout << (failures == 0 ? "all 12 criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
