#include "measlat/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "measlat/error.hpp"

namespace measlat {

std::vector<BoolMonomial> GroebnerBasis::leading_monomials() const {
  std::vector<BoolMonomial> out;
  out.reserve(basis.size());
  for (const auto& g : basis) out.push_back(g.leading());
  return out;
}

MeasureIdeal build_ideal(const FiniteLattice& lat) {
  const std::size_t n = lat.size();
  if (n > BoolMonomial::kMaxVariables)
    throw Error(ErrorKind::SizeCapExceeded, "the Groebner engine supports at most 256 lattice elements");
  auto var = [](Element x) { return BoolPoly::variable(x); };

  std::vector<BoolPoly> gens;
  gens.push_back(var(lat.bottom()));
  gens.push_back(var(lat.top()) + BoolPoly::one());
  for (Element x = 0; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      const BoolPoly xy = var(x) * var(y);
      gens.push_back(var(lat.meet(x, y)) + xy);
      gens.push_back(var(lat.join(x, y)) + var(x) + var(y) + xy);
    }
  }
  std::erase_if(gens, [](const BoolPoly& p) { return p.is_zero(); });
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return MeasureIdeal{n, std::move(gens)};
}

BoolPoly reduce(const BoolPoly& p, const std::vector<BoolPoly>& polys) {
  std::vector<BoolMonomial> remainder;
  BoolPoly h = p;
  while (!h.is_zero()) {
    const BoolMonomial lt = h.leading();
    const BoolPoly* divisor = nullptr;
    for (const auto& g : polys) {
      if (!g.is_zero() && g.leading().divides(lt)) {
        divisor = &g;
        break;
      }
    }
    if (divisor) {
      // The multiplier is disjoint from lt(g), so lt(m*g) = lt(h) cancels.
      h += *divisor * lt.without(divisor->leading());
    } else {
      remainder.push_back(lt);
      h += BoolPoly(lt);
    }
  }
  return BoolPoly::from_terms(std::move(remainder));
}

BoolPoly normal_form(const BoolPoly& p, const GroebnerBasis& gb) { return reduce(p, gb.basis); }

namespace {

struct Pair {
  std::size_t degree;
  BoolMonomial lcm;
  std::size_t i;
  std::size_t j;       // second basis index, or the variable for a field pair
  bool field = false;  // pair with x^2 + x

  auto key() const { return std::tie(degree, lcm, i, field, j); }
  friend bool operator<(const Pair& a, const Pair& b) { return a.key() < b.key(); }
};

class Buchberger {
 public:
  explicit Buchberger(std::size_t nvars) : nvars_(nvars) {}

  GroebnerBasis run(const std::vector<BoolPoly>& generators) {
    for (const auto& f : generators) {
      if (unit_) break;
      auto h = reduce(f, g_);
      if (!h.is_zero()) add(std::move(h));
    }
    while (!unit_ && !queue_.empty()) {
      const Pair p = *queue_.begin();
      queue_.erase(queue_.begin());
      if (!p.field) {
        pending_.erase({p.i, p.j});
        if (chain_criterion(p)) continue;
      }
      BoolPoly s = p.field ? g_[p.i] * BoolMonomial::variable(p.j)
                           : g_[p.i] * p.lcm.without(g_[p.i].leading()) + g_[p.j] * p.lcm.without(g_[p.j].leading());
      auto h = reduce(s, g_);
      if (!h.is_zero()) add(std::move(h));
    }
    return finish();
  }

 private:
  void add(BoolPoly h) {
    if (h.leading().is_one()) {
      unit_ = true;
      return;
    }
    const std::size_t k = g_.size();
    const BoolMonomial lt = h.leading();
    g_.push_back(std::move(h));
    for (std::size_t i = 0; i < k; ++i) {
      const BoolMonomial& li = g_[i].leading();
      if (li.coprime(lt)) continue;
      const BoolMonomial lcm = li * lt;
      queue_.insert(Pair{lcm.degree(), lcm, i, k});
      pending_.insert({i, k});
    }
    // Field pairs x*g for each x in lt(g); for x outside lt(g) the leading
    // monomials are coprime.
    for (std::size_t v : lt.variables()) queue_.insert(Pair{lt.degree() + 1, lt, k, v, true});
  }

  bool chain_criterion(const Pair& p) const {
    for (std::size_t k = 0; k < g_.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      if (!g_[k].leading().divides(p.lcm)) continue;
      if (pending_.contains(ordered(p.i, k)) || pending_.contains(ordered(p.j, k))) continue;
      return true;
    }
    return false;
  }

  static std::pair<std::size_t, std::size_t> ordered(std::size_t a, std::size_t b) {
    return a < b ? std::pair{a, b} : std::pair{b, a};
  }

  GroebnerBasis finish() {
    GroebnerBasis gb;
    gb.num_variables = nvars_;
    if (unit_) {
      gb.basis = {BoolPoly::one()};
      return gb;
    }
    std::sort(g_.begin(), g_.end(), [](const BoolPoly& a, const BoolPoly& b) { return a.leading() < b.leading(); });
    std::vector<BoolPoly> minimal;
    for (auto& g : g_) {
      const bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                         [&](const BoolPoly& m) { return m.leading().divides(g.leading()); });
      if (!redundant) minimal.push_back(std::move(g));
    }
    for (auto& g : minimal) {
      const BoolPoly lead(g.leading());
      const BoolPoly tail = reduce(g + lead, minimal);
      gb.basis.push_back(lead + tail);
    }
    std::sort(gb.basis.begin(), gb.basis.end(),
              [](const BoolPoly& a, const BoolPoly& b) { return a.leading() < b.leading(); });
    return gb;
  }

  std::size_t nvars_;
  std::vector<BoolPoly> g_;
  std::set<Pair> queue_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
  bool unit_ = false;
};

}  // namespace

GroebnerBasis buchberger(const MeasureIdeal& ideal) { return Buchberger(ideal.num_variables).run(ideal.generators); }

std::vector<BoolMonomial> standard_monomials(const GroebnerBasis& gb, std::size_t cap) {
  const auto leads = gb.leading_monomials();
  std::vector<BoolMonomial> out;
  auto visit = [&](auto&& self, const BoolMonomial& m, std::size_t next) -> void {
    for (const auto& l : leads)
      if (l.divides(m)) return;
    if (out.size() >= cap) throw Error(ErrorKind::CapExceeded, "too many standard monomials");
    out.push_back(m);
    for (std::size_t v = next; v < gb.num_variables; ++v) self(self, m.with(v), v + 1);
  };
  visit(visit, BoolMonomial{}, 0);
  std::sort(out.begin(), out.end());
  return out;
}

BoolPoly random_polynomial(std::mt19937_64& rng, std::size_t num_variables, std::size_t max_terms,
                           std::size_t max_degree) {
  std::uniform_int_distribution<std::size_t> terms_dist(0, max_terms);
  std::uniform_int_distribution<std::size_t> degree_dist(0, max_degree);
  std::uniform_int_distribution<std::size_t> var_dist(0, num_variables == 0 ? 0 : num_variables - 1);
  std::vector<BoolMonomial> terms;
  const std::size_t count = terms_dist(rng);
  for (std::size_t t = 0; t < count; ++t) {
    BoolMonomial m;
    const std::size_t degree = num_variables == 0 ? 0 : degree_dist(rng);
    for (std::size_t d = 0; d < degree; ++d) m = m.with(var_dist(rng));
    terms.push_back(m);
  }
  return BoolPoly::from_terms(std::move(terms));
}

BooleanRingCheck is_boolean_ring(const GroebnerBasis& gb, std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const BoolPoly p = random_polynomial(rng, gb.num_variables);
    if (normal_form(p * p, gb) != normal_form(p, gb)) return BooleanRingCheck{false, p};
  }
  return {};
}

std::size_t groebner_measurability(const FiniteLattice& lat) {
  return standard_monomials(buchberger(build_ideal(lat))).size();
}

}  // namespace measlat
