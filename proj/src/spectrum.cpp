#include "measlat/spectrum.hpp"

#include <algorithm>
#include <map>

#include "measlat/error.hpp"

namespace measlat {

bool is_two_valued_point(const FiniteLattice& lat, const std::vector<std::uint8_t>& values) {
  const auto n = static_cast<Element>(lat.size());
  if (values.size() != n) return false;
  if (values[lat.bottom()] != 0 || values[lat.top()] != 1) return false;
  for (Element a = 0; a < n; ++a) {
    if (values[a] > 1) return false;
    for (Element b = a + 1; b < n; ++b) {
      if (values[lat.meet(a, b)] != (values[a] & values[b])) return false;
      if (values[lat.join(a, b)] != (values[a] | values[b])) return false;
    }
  }
  return true;
}

namespace {

constexpr std::int8_t kUnset = -1;

class PointSearch {
 public:
  explicit PointSearch(const FiniteLattice& lat) : lat_(lat), n_(static_cast<Element>(lat.size())) {}

  std::vector<TwoValuedPoint> run() {
    std::vector<std::int8_t> assignment(n_, kUnset);
    if (assign(assignment, lat_.bottom(), 0) && assign(assignment, lat_.top(), 1)) descend(assignment);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  // Sets x := v and closes under the order and the meet/join laws.
  // Returns false on contradiction.
  bool assign(std::vector<std::int8_t>& a, Element x, std::int8_t v) {
    std::vector<std::pair<Element, std::int8_t>> queue{{x, v}};
    while (!queue.empty()) {
      auto [y, val] = queue.back();
      queue.pop_back();
      if (a[y] == val) continue;
      if (a[y] != kUnset) return false;
      a[y] = val;
      for (Element z = 0; z < n_; ++z) {
        if (val == 1) {
          if (lat_.leq(y, z)) queue.emplace_back(z, 1);
          if (a[z] == 1) queue.emplace_back(lat_.meet(y, z), 1);
          if (a[lat_.meet(y, z)] == 0) queue.emplace_back(z, 0);
        } else {
          if (lat_.leq(z, y)) queue.emplace_back(z, 0);
          if (a[z] == 0) queue.emplace_back(lat_.join(y, z), 0);
          if (a[lat_.join(y, z)] == 1) queue.emplace_back(z, 1);
        }
      }
    }
    return true;
  }

  void descend(const std::vector<std::int8_t>& a) {
    for (Element x : lat_.linear_extension()) {
      if (a[x] != kUnset) continue;
      for (std::int8_t v : {std::int8_t{0}, std::int8_t{1}}) {
        auto next = a;
        if (assign(next, x, v)) descend(next);
      }
      return;
    }
    std::vector<std::uint8_t> values(a.begin(), a.end());
    if (is_two_valued_point(lat_, values)) found_.push_back(TwoValuedPoint{std::move(values)});
  }

  const FiniteLattice& lat_;
  Element n_;
  std::vector<TwoValuedPoint> found_;
};

}  // namespace

Spectrum enumerate_points(const FiniteLattice& lat) {
  // The one-element lattice has 0 = 1, so no valuation exists.
  if (lat.size() == 1) return {};
  return Spectrum{PointSearch(lat).run()};
}

std::size_t measurability(const FiniteLattice& lat) { return enumerate_points(lat).size(); }

std::vector<std::size_t> point_action(const FiniteLattice& lat, const LatticeMorphism& g, const Spectrum& spec) {
  if (g.source.get() != g.target.get() && g.source->size() != g.target->size())
    throw Error(ErrorKind::NotAnAutomorphism, "generator is not an endomorphism");
  if (g.map.size() != lat.size() || !is_automorphism(g))
    throw Error(ErrorKind::NotAnAutomorphism, "generator is not a lattice automorphism");
  std::map<std::vector<std::uint8_t>, std::size_t> index;
  for (std::size_t i = 0; i < spec.size(); ++i) index.emplace(spec.points[i].values, i);

  std::vector<std::size_t> sigma(spec.size());
  std::vector<bool> hit(spec.size(), false);
  for (std::size_t i = 0; i < spec.size(); ++i) {
    std::vector<std::uint8_t> pulled(lat.size());
    for (Element x = 0; x < lat.size(); ++x) pulled[x] = spec.points[i].values[g(x)];
    auto it = index.find(pulled);
    if (it == index.end() || hit[it->second])
      throw Error(ErrorKind::NotAnAutomorphism, "generator does not permute the points");
    sigma[i] = it->second;
    hit[it->second] = true;
  }
  return sigma;
}

}  // namespace measlat
