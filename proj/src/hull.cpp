#include "measlat/hull.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "measlat/error.hpp"

namespace measlat {

std::uint64_t BooleanHull::mask(Element x) const {
  std::uint64_t m = 0;
  for (std::size_t i : d_map[x]) m |= std::uint64_t{1} << i;
  return m;
}

BooleanHull hull(const FiniteLattice& lat) {
  BooleanHull h;
  h.spectrum = enumerate_points(lat);
  h.d_map.resize(lat.size());
  for (std::size_t i = 0; i < h.points(); ++i)
    for (Element x = 0; x < lat.size(); ++x)
      if (h.spectrum.points[i](x)) h.d_map[x].push_back(i);
  if (h.points() <= BooleanHull::kMaxMaterializedPoints) {
    FiniteLattice y = powerset(h.points());
    std::vector<std::string> names(y.size());
    for (std::size_t s = 0; s < y.size(); ++s) {
      if (s == 0) names[s] = "empty";
      for (std::size_t i = 0; i < h.points(); ++i)
        if ((s >> i) & 1U) names[s] += (names[s].empty() ? "p" : "_p") + std::to_string(i);
    }
    h.lattice = y.renamed(std::move(names));
  }
  return h;
}

std::vector<std::uint64_t> generated_subalgebra(const BooleanHull& h) {
  if (h.points() >= 24) throw Error(ErrorKind::CapExceeded, "subalgebra closure limited to 23 points");
  const std::uint64_t all = (std::uint64_t{1} << h.points()) - 1;
  std::set<std::uint64_t> seen{0, all};
  for (Element x = 0; x < h.d_map.size(); ++x) seen.insert(h.mask(x));
  std::vector<std::uint64_t> work(seen.begin(), seen.end());
  while (!work.empty()) {
    const std::uint64_t a = work.back();
    work.pop_back();
    std::vector<std::uint64_t> fresh{all & ~a};
    for (std::uint64_t b : seen) {
      fresh.push_back(a & b);
      fresh.push_back(a | b);
    }
    for (std::uint64_t c : fresh)
      if (seen.insert(c).second) work.push_back(c);
  }
  return {seen.begin(), seen.end()};
}

std::optional<std::string> hull_violation(const FiniteLattice& lat, const BooleanHull& h, const GroebnerBasis* gb) {
  if (h.points() >= 64) throw Error(ErrorKind::CapExceeded, "hull checks are limited to 63 points");
  const std::uint64_t all = h.points() == 0 ? 0 : (~std::uint64_t{0} >> (64 - h.points()));
  if (h.mask(lat.bottom()) != 0) return "D(0) is not empty";
  if (h.mask(lat.top()) != all) return "D(1) is not the full point set";
  const auto n = static_cast<Element>(lat.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const std::string at = " at (" + lat.name(x) + ", " + lat.name(y) + ")";
      if (h.mask(lat.meet(x, y)) != (h.mask(x) & h.mask(y))) return "D does not preserve meet" + at;
      if (h.mask(lat.join(x, y)) != (h.mask(x) | h.mask(y))) return "D does not preserve join" + at;
      if (lat.leq(x, y) && (h.mask(x) & ~h.mask(y)) != 0) return "D does not preserve order" + at;
      if (lat.meet(x, y) == lat.bottom() && lat.join(x, y) == lat.top() && h.mask(y) != (all & ~h.mask(x)))
        return "D does not preserve complements" + at;
      if (gb && x < y && h.mask(x) == h.mask(y) &&
          !normal_form(BoolPoly::variable(x) + BoolPoly::variable(y), *gb).is_zero())
        return "D(x) = D(y) but x != y in the ring" + at;
    }
  }
  if (h.points() < 24 && generated_subalgebra(h).size() != (std::size_t{1} << h.points()))
    return "the image of D does not separate points";
  return std::nullopt;
}

std::vector<std::vector<Element>> enumerate_morphisms(const FiniteLattice& x, const FiniteLattice& y) {
  std::vector<std::vector<Element>> out;
  const auto nx = static_cast<Element>(x.size());
  const auto& order = x.linear_extension();
  std::vector<Element> f(nx);
  std::vector<bool> assigned(nx, false);

  auto consistent = [&]() {
    for (Element a = 0; a < nx; ++a) {
      if (!assigned[a]) continue;
      for (Element b = a; b < nx; ++b) {
        if (!assigned[b]) continue;
        const Element m = x.meet(a, b), j = x.join(a, b);
        if (assigned[m] && f[m] != y.meet(f[a], f[b])) return false;
        if (assigned[j] && f[j] != y.join(f[a], f[b])) return false;
      }
    }
    return true;
  };
  auto descend = [&](auto&& self, std::size_t k) -> void {
    if (k == order.size()) {
      out.push_back(f);
      return;
    }
    const Element e = order[k];
    std::vector<Element> choices;
    if (e == x.bottom()) choices = {y.bottom()};
    if (e == x.top()) {
      if (e == x.bottom() && y.bottom() != y.top()) return;
      choices = {y.top()};
    }
    if (choices.empty())
      for (Element t = 0; t < y.size(); ++t) choices.push_back(t);
    for (Element t : choices) {
      f[e] = t;
      assigned[e] = true;
      if (consistent()) self(self, k + 1);
      assigned[e] = false;
    }
  };
  descend(descend, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

/// Lattice maps P(points) -> target. Joins force g(S) = join of g({i}) over
/// i in S, so candidates are tuples of pairwise disjoint images joining to 1;
/// each candidate is then checked on all pairs.
std::vector<std::vector<Element>> hull_morphisms(std::size_t points, const FiniteLattice& target) {
  std::vector<std::vector<Element>> maps;
  std::vector<Element> atom_image(points);
  const std::size_t subsets = std::size_t{1} << points;
  auto descend = [&](auto&& self, std::size_t i, Element joined) -> void {
    if (i == points) {
      if (joined != target.top()) return;
      std::vector<Element> g(subsets, target.bottom());
      for (std::size_t s = 1; s < subsets; ++s) {
        const std::size_t low = static_cast<std::size_t>(std::countr_zero(s));
        g[s] = target.join(g[s & (s - 1)], atom_image[low]);
      }
      for (std::size_t a = 0; a < subsets; ++a)
        for (std::size_t b = 0; b < subsets; ++b)
          if (g[a & b] != target.meet(g[a], g[b]) || g[a | b] != target.join(g[a], g[b])) return;
      maps.push_back(std::move(g));
      return;
    }
    for (Element t = 0; t < target.size(); ++t) {
      if (target.meet(t, joined) != target.bottom()) continue;
      atom_image[i] = t;
      self(self, i + 1, target.join(joined, t));
    }
  };
  descend(descend, 0, target.bottom());
  return maps;
}

}  // namespace

UniversalPropertyVerdict verify_universal_property(const FiniteLattice& lat, const FiniteLattice& target,
                                                   std::size_t max_source, std::size_t max_target) {
  if (lat.size() > max_source || target.size() > max_target) {
    throw Error(ErrorKind::CapExceeded, "universal-property check limited to |X| <= " + std::to_string(max_source) +
                                            " and |target| <= " + std::to_string(max_target));
  }
  if (!is_boolean(target)) throw Error(ErrorKind::TargetNotBoolean, "target lattice is not Boolean");

  const BooleanHull h = hull(lat);
  const auto fs = enumerate_morphisms(lat, target);
  const auto gs = hull_morphisms(h.points(), target);
  UniversalPropertyVerdict verdict;
  verdict.maps_checked = fs.size();
  for (const auto& f : fs) {
    std::size_t factorizations = 0;
    for (const auto& g : gs) {
      bool equal = true;
      for (Element x = 0; x < lat.size() && equal; ++x) equal = g[h.mask(x)] == f[x];
      factorizations += equal ? 1 : 0;
    }
    if (factorizations != 1) {
      verdict.ok = false;
      verdict.reason = "a lattice map has " + std::to_string(factorizations) + " factorizations through the hull";
      return verdict;
    }
  }
  return verdict;
}

RingVerdict boolean_ring_structure(const FiniteLattice& lat) {
  if (!is_boolean(lat)) throw Error(ErrorKind::NotBoolean, "lattice is not complemented and distributive");
  const auto n = static_cast<Element>(lat.size());
  std::vector<Element> comp(n);
  for (Element z = 0; z < n; ++z) comp[z] = *complement(lat, z);

  const GroebnerBasis gb = buchberger(build_ideal(lat));
  std::vector<BoolPoly> pi(n);
  for (Element z = 0; z < n; ++z) pi[z] = normal_form(BoolPoly::variable(z), gb);

  auto fail = [&](const std::string& why) { return RingVerdict{false, why}; };
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element sum = lat.join(lat.meet(a, comp[b]), lat.meet(comp[a], b));
      const std::string at = " at (" + lat.name(a) + ", " + lat.name(b) + ")";
      if (normal_form(pi[a] + pi[b], gb) != pi[sum]) return fail("addition is not preserved" + at);
      if (normal_form(pi[a] * pi[b], gb) != pi[lat.meet(a, b)]) return fail("multiplication is not preserved" + at);
    }
  }
  std::set<BoolPoly> images(pi.begin(), pi.end());
  if (images.size() != n) return fail("the universal measure is not injective");
  const std::size_t dim = standard_monomials(gb).size();
  if (dim >= 63 || (std::size_t{1} << dim) != n) return fail("|GF(2)[X]/I| differs from |X|");
  return {};
}

bool naturality_holds(const LatticeMorphism& f) {
  const FiniteLattice& x = *f.source;
  const FiniteLattice& y = *f.target;
  const BooleanHull hx = hull(x);
  const BooleanHull hy = hull(y);
  std::map<std::vector<std::uint8_t>, std::size_t> index;
  for (std::size_t i = 0; i < hx.points(); ++i) index.emplace(hx.spectrum.points[i].values, i);

  // phi(j): the point of X obtained by pulling back point j of Y along f.
  std::vector<std::size_t> phi(hy.points());
  for (std::size_t j = 0; j < hy.points(); ++j) {
    std::vector<std::uint8_t> pulled(x.size());
    for (Element e = 0; e < x.size(); ++e) pulled[e] = hy.spectrum.points[j].values[f(e)];
    auto it = index.find(pulled);
    if (it == index.end()) return false;
    phi[j] = it->second;
  }
  for (Element e = 0; e < x.size(); ++e) {
    std::vector<std::size_t> pushed;
    for (std::size_t j = 0; j < hy.points(); ++j)
      if (std::binary_search(hx.d_map[e].begin(), hx.d_map[e].end(), phi[j])) pushed.push_back(j);
    if (pushed != hy.d_map[f(e)]) return false;
  }
  return true;
}

}  // namespace measlat
