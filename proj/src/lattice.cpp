#include "measlat/lattice.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

#include "measlat/error.hpp"

namespace measlat {

namespace {

std::size_t popcount_row(const std::uint64_t* row, std::size_t words) {
  std::size_t count = 0;
  for (std::size_t w = 0; w < words; ++w) count += std::popcount(row[w]);
  return count;
}

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw Error(ErrorKind::SizeCapExceeded,
                "lattice would have " + std::to_string(n) + " elements (cap " + std::to_string(cap) + ")");
  }
}

}  // namespace

FiniteLattice FiniteLattice::from_covers(const std::vector<std::string>& elements,
                                         const std::vector<std::pair<std::string, std::string>>& covers,
                                         std::size_t size_cap) {
  std::unordered_map<std::string, Element> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!index.emplace(elements[i], static_cast<Element>(i)).second) {
      throw Error(ErrorKind::DuplicateElement, "duplicate element '" + elements[i] + "'");
    }
  }
  std::vector<Cover> relation;
  relation.reserve(covers.size());
  for (const auto& [a, b] : covers) {
    auto ia = index.find(a);
    if (ia == index.end()) throw Error(ErrorKind::UnknownElement, "unknown element '" + a + "'");
    auto ib = index.find(b);
    if (ib == index.end()) throw Error(ErrorKind::UnknownElement, "unknown element '" + b + "'");
    relation.emplace_back(ia->second, ib->second);
  }
  return from_relation(elements, relation, size_cap);
}

FiniteLattice FiniteLattice::from_relation(std::vector<std::string> names, const std::vector<Cover>& relation,
                                           std::size_t size_cap) {
  const std::size_t n = names.size();
  check_cap(n, size_cap);
  if (n == 0) throw Error(ErrorKind::NotBounded, "a lattice needs at least one element");
  {
    std::unordered_set<std::string> seen;
    for (const auto& name : names) {
      if (!seen.insert(name).second) throw Error(ErrorKind::DuplicateElement, "duplicate element '" + name + "'");
    }
  }

  std::vector<std::vector<Element>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (auto [a, b] : relation) {
    if (a >= n || b >= n) throw Error(ErrorKind::UnknownElement, "cover references an undeclared element");
    if (a == b) throw Error(ErrorKind::CycleInCovers, "element '" + names[a] + "' is covered by itself");
    succ[a].push_back(b);
    ++indegree[b];
  }

  // Kahn's algorithm; whatever remains afterwards lies on a cycle.
  std::vector<Element> order;
  order.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) order.push_back(static_cast<Element>(i));
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Element b : succ[order[head]])
      if (--indegree[b] == 0) order.push_back(b);
  }
  if (order.size() != n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (indegree[i] != 0) {
        throw Error(ErrorKind::CycleInCovers, "covers contain a cycle through '" + names[i] + "'");
      }
    }
  }

  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> up(n * words, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Element x = *it;
    std::uint64_t* row = &up[x * words];
    row[x / 64] |= std::uint64_t{1} << (x % 64);
    for (Element y : succ[x]) {
      const std::uint64_t* other = &up[y * words];
      for (std::size_t w = 0; w < words; ++w) row[w] |= other[w];
    }
  }
  return from_up_sets(std::move(names), std::move(up), words);
}

FiniteLattice FiniteLattice::from_up_sets(std::vector<std::string> names, std::vector<std::uint64_t> up,
                                          std::size_t words) {
  const std::size_t n = names.size();
  std::vector<std::uint64_t> down(n * words, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if ((up[x * words + y / 64] >> (y % 64)) & 1U) down[y * words + x / 64] |= std::uint64_t{1} << (x % 64);

  std::vector<std::size_t> minimal, maximal;
  for (std::size_t x = 0; x < n; ++x) {
    if (popcount_row(&down[x * words], words) == 1) minimal.push_back(x);
    if (popcount_row(&up[x * words], words) == 1) maximal.push_back(x);
  }
  if (minimal.size() != 1) {
    throw Error(ErrorKind::NotBounded, "no unique minimum: " + std::to_string(minimal.size()) + " minimal elements");
  }
  if (maximal.size() != 1) {
    throw Error(ErrorKind::NotBounded, "no unique maximum: " + std::to_string(maximal.size()) + " maximal elements");
  }

  // Linear extension by down-set size; bitsets re-indexed by position in it
  // so that the greatest lower bound, if any, is the highest set bit.
  std::vector<std::size_t> down_count(n), up_count(n);
  for (std::size_t x = 0; x < n; ++x) {
    down_count[x] = popcount_row(&down[x * words], words);
    up_count[x] = popcount_row(&up[x * words], words);
  }
  std::vector<Element> linear(n);
  std::iota(linear.begin(), linear.end(), 0);
  std::stable_sort(linear.begin(), linear.end(), [&](Element a, Element b) { return down_count[a] < down_count[b]; });
  std::vector<std::size_t> pos(n);
  for (std::size_t p = 0; p < n; ++p) pos[linear[p]] = p;

  std::vector<std::uint64_t> down_lin(n * words, 0), up_lin(n * words, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if ((up[x * words + y / 64] >> (y % 64)) & 1U) {
        up_lin[x * words + pos[y] / 64] |= std::uint64_t{1} << (pos[y] % 64);
        down_lin[y * words + pos[x] / 64] |= std::uint64_t{1} << (pos[x] % 64);
      }
    }
  }

  std::vector<Element> meet(n * n), join(n * n);
  std::vector<std::uint64_t> scratch(words);
  auto highest = [&](const std::vector<std::uint64_t>& bits) -> std::optional<std::size_t> {
    for (std::size_t w = words; w-- > 0;)
      if (bits[w] != 0) return w * 64 + (63 - std::countl_zero(bits[w]));
    return std::nullopt;
  };
  auto lowest = [&](const std::vector<std::uint64_t>& bits) -> std::optional<std::size_t> {
    for (std::size_t w = 0; w < words; ++w)
      if (bits[w] != 0) return w * 64 + std::countr_zero(bits[w]);
    return std::nullopt;
  };
  auto fail = [&](std::size_t a, std::size_t b, const char* what) {
    throw Error(ErrorKind::NotALattice,
                "elements '" + names[a] + "' and '" + names[b] + "' have no unique " + what);
  };

  for (std::size_t a = 0; a < n; ++a) {
    meet[a * n + a] = join[a * n + a] = static_cast<Element>(a);
    for (std::size_t b = a + 1; b < n; ++b) {
      std::size_t common = 0;
      for (std::size_t w = 0; w < words; ++w) {
        scratch[w] = down_lin[a * words + w] & down_lin[b * words + w];
        common += std::popcount(scratch[w]);
      }
      auto h = highest(scratch);
      if (!h || down_count[linear[*h]] != common) fail(a, b, "meet");
      meet[a * n + b] = meet[b * n + a] = linear[*h];

      common = 0;
      for (std::size_t w = 0; w < words; ++w) {
        scratch[w] = up_lin[a * words + w] & up_lin[b * words + w];
        common += std::popcount(scratch[w]);
      }
      auto l = lowest(scratch);
      if (!l || up_count[linear[*l]] != common) fail(a, b, "join");
      join[a * n + b] = join[b * n + a] = linear[*l];
    }
  }

  return assemble(std::move(names), std::move(meet), std::move(join), static_cast<Element>(minimal.front()),
                  static_cast<Element>(maximal.front()));
}

FiniteLattice FiniteLattice::assemble(std::vector<std::string> names, std::vector<Element> meet,
                                      std::vector<Element> join, Element bottom, Element top) {
  FiniteLattice lat;
  const std::size_t n = names.size();
  lat.names_ = std::move(names);
  lat.meet_ = std::move(meet);
  lat.join_ = std::move(join);
  lat.bottom_ = bottom;
  lat.top_ = top;
  lat.words_ = (n + 63) / 64;
  lat.up_.assign(n * lat.words_, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (lat.meet_[a * n + b] == a) lat.up_[a * lat.words_ + b / 64] |= std::uint64_t{1} << (b % 64);
  lat.finish();
  return lat;
}

void FiniteLattice::finish() {
  const std::size_t n = size();
  index_.clear();
  for (std::size_t i = 0; i < n; ++i) index_.emplace(names_[i], static_cast<Element>(i));

  std::vector<std::uint64_t> down(n * words_, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (leq(static_cast<Element>(x), static_cast<Element>(y))) down[y * words_ + x / 64] |= std::uint64_t{1} << (x % 64);

  // y covers x iff y is the only element of the strict up-set of x below y.
  upper_.assign(n, {});
  lower_.assign(n, {});
  std::vector<std::uint64_t> strict(words_);
  for (std::size_t x = 0; x < n; ++x) {
    std::copy_n(&up_[x * words_], words_, strict.begin());
    strict[x / 64] &= ~(std::uint64_t{1} << (x % 64));
    for (std::size_t y = 0; y < n; ++y) {
      if (!((strict[y / 64] >> (y % 64)) & 1U)) continue;
      std::size_t between = 0;
      for (std::size_t w = 0; w < words_ && between < 2; ++w) between += std::popcount(down[y * words_ + w] & strict[w]);
      if (between == 1) {
        upper_[x].push_back(static_cast<Element>(y));
        lower_[y].push_back(static_cast<Element>(x));
      }
    }
  }

  std::vector<std::size_t> down_count(n);
  for (std::size_t x = 0; x < n; ++x) down_count[x] = popcount_row(&down[x * words_], words_);
  linear_.resize(n);
  std::iota(linear_.begin(), linear_.end(), 0);
  std::stable_sort(linear_.begin(), linear_.end(), [&](Element a, Element b) { return down_count[a] < down_count[b]; });
  height_.assign(n, 0);
  for (Element x : linear_)
    for (Element lo : lower_[x]) height_[x] = std::max(height_[x], height_[lo] + 1);
}

std::optional<Element> FiniteLattice::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Element FiniteLattice::index_of(std::string_view name) const {
  if (auto x = find(name)) return *x;
  throw Error(ErrorKind::UnknownElement, "unknown element '" + std::string(name) + "'");
}

std::vector<FiniteLattice::Cover> FiniteLattice::covers() const {
  std::vector<Cover> out;
  for (std::size_t x = 0; x < size(); ++x)
    for (Element y : upper_[x]) out.emplace_back(static_cast<Element>(x), y);
  std::sort(out.begin(), out.end());
  return out;
}

FiniteLattice FiniteLattice::renamed(std::vector<std::string> names) const {
  if (names.size() != size()) throw Error(ErrorKind::DimensionMismatch, "rename needs one name per element");
  std::unordered_set<std::string> seen;
  for (const auto& name : names)
    if (!seen.insert(name).second) throw Error(ErrorKind::DuplicateElement, "duplicate element '" + name + "'");
  FiniteLattice copy = *this;
  copy.names_ = std::move(names);
  copy.index_.clear();
  for (std::size_t i = 0; i < copy.names_.size(); ++i) copy.index_.emplace(copy.names_[i], static_cast<Element>(i));
  return copy;
}

std::optional<std::string> morphism_violation(const LatticeMorphism& f) {
  const FiniteLattice& x = *f.source;
  const FiniteLattice& y = *f.target;
  if (f.map.size() != x.size()) return "map is not total on the source";
  for (Element v : f.map)
    if (v >= y.size()) return "map leaves the target";
  if (f(x.bottom()) != y.bottom()) return "bottom is not preserved";
  if (f(x.top()) != y.top()) return "top is not preserved";
  const auto n = static_cast<Element>(x.size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (f(x.meet(a, b)) != y.meet(f(a), f(b))) return "meet of '" + x.name(a) + "' and '" + x.name(b) + "' is not preserved";
      if (f(x.join(a, b)) != y.join(f(a), f(b))) return "join of '" + x.name(a) + "' and '" + x.name(b) + "' is not preserved";
    }
  }
  return std::nullopt;
}

bool is_morphism(const LatticeMorphism& f) { return !morphism_violation(f).has_value(); }

bool is_automorphism(const LatticeMorphism& f) {
  if (f.source->size() != f.target->size() || !is_morphism(f)) return false;
  std::vector<bool> hit(f.target->size(), false);
  for (Element v : f.map) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

LatticeMorphism identity_morphism(std::shared_ptr<const FiniteLattice> lattice) {
  std::vector<Element> map(lattice->size());
  std::iota(map.begin(), map.end(), 0);
  return LatticeMorphism{lattice, lattice, std::move(map)};
}

std::optional<std::string> lattice_law_violation(const FiniteLattice& lat) {
  const auto n = static_cast<Element>(lat.size());
  auto names = [&](std::initializer_list<Element> xs) {
    std::string s;
    for (Element x : xs) s += (s.empty() ? "" : ", ") + lat.name(x);
    return "(" + s + ")";
  };
  for (Element a = 0; a < n; ++a) {
    if (lat.meet(a, a) != a || lat.join(a, a) != a) return "idempotency fails at " + names({a});
    if (lat.meet(lat.bottom(), a) != lat.bottom() || lat.join(lat.top(), a) != lat.top())
      return "bounds fail at " + names({a});
    for (Element b = 0; b < n; ++b) {
      if (lat.meet(a, b) != lat.meet(b, a) || lat.join(a, b) != lat.join(b, a)) return "commutativity fails at " + names({a, b});
      if (lat.meet(a, lat.join(a, b)) != a || lat.join(a, lat.meet(a, b)) != a) return "absorption fails at " + names({a, b});
      if ((lat.meet(a, b) == a) != lat.leq(a, b)) return "order and meet disagree at " + names({a, b});
      for (Element c = 0; c < n; ++c) {
        if (lat.meet(lat.meet(a, b), c) != lat.meet(a, lat.meet(b, c)) ||
            lat.join(lat.join(a, b), c) != lat.join(a, lat.join(b, c)))
          return "associativity fails at " + names({a, b, c});
      }
    }
  }
  return std::nullopt;
}

bool is_distributive(const FiniteLattice& lat) {
  const auto n = static_cast<Element>(lat.size());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (lat.meet(a, lat.join(b, c)) != lat.join(lat.meet(a, b), lat.meet(a, c))) return false;
  return true;
}

std::optional<Element> complement(const FiniteLattice& lat, Element x) {
  for (Element y = 0; y < lat.size(); ++y)
    if (lat.meet(x, y) == lat.bottom() && lat.join(x, y) == lat.top()) return y;
  return std::nullopt;
}

bool is_complemented(const FiniteLattice& lat) {
  for (Element x = 0; x < lat.size(); ++x)
    if (!complement(lat, x)) return false;
  return true;
}

std::vector<Element> atoms(const FiniteLattice& lat) {
  if (lat.size() == 1) return {};
  return lat.upper_covers(lat.bottom());
}

FiniteLattice chain(std::size_t n) {
  const std::size_t m = n + 1;
  std::vector<std::string> names(m);
  std::vector<Element> meet(m * m), join(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    names[i] = std::to_string(i);
    for (std::size_t j = 0; j < m; ++j) {
      meet[i * m + j] = static_cast<Element>(std::min(i, j));
      join[i * m + j] = static_cast<Element>(std::max(i, j));
    }
  }
  return FiniteLattice::assemble(std::move(names), std::move(meet), std::move(join), 0, static_cast<Element>(n));
}

FiniteLattice powerset(std::size_t n, std::size_t size_cap) {
  if (n >= 31 || (std::size_t{1} << n) > size_cap) {
    throw Error(ErrorKind::SizeCapExceeded, "powerset(" + std::to_string(n) + ") exceeds the size cap");
  }
  const std::size_t m = std::size_t{1} << n;
  std::vector<std::string> names(m);
  for (std::size_t s = 0; s < m; ++s) {
    if (s == 0) {
      names[s] = "0";
    } else if (n <= 26) {
      for (std::size_t i = 0; i < n; ++i)
        if ((s >> i) & 1U) names[s] += static_cast<char>('a' + i);
    } else {
      names[s] = "s" + std::to_string(s);
    }
  }
  std::vector<Element> meet(m * m), join(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      meet[a * m + b] = static_cast<Element>(a & b);
      join[a * m + b] = static_cast<Element>(a | b);
    }
  return FiniteLattice::assemble(std::move(names), std::move(meet), std::move(join), 0, static_cast<Element>(m - 1));
}

FiniteLattice product(const FiniteLattice& x, const FiniteLattice& y, std::size_t size_cap) {
  const std::size_t nx = x.size(), ny = y.size();
  if (ny != 0 && nx > size_cap / ny) {
    throw Error(ErrorKind::SizeCapExceeded, "product would have " + std::to_string(nx * ny) + " elements");
  }
  const std::size_t m = nx * ny;
  std::vector<std::string> names(m);
  std::unordered_set<std::string> seen;
  bool unique = true;
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) {
      names[i * ny + j] = x.name(static_cast<Element>(i)) + "_" + y.name(static_cast<Element>(j));
      unique = unique && seen.insert(names[i * ny + j]).second;
    }
  if (!unique)
    for (std::size_t k = 0; k < m; ++k) names[k] = "e" + std::to_string(k);

  std::vector<Element> meet(m * m), join(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    const auto ai = static_cast<Element>(a / ny), aj = static_cast<Element>(a % ny);
    for (std::size_t b = 0; b < m; ++b) {
      const auto bi = static_cast<Element>(b / ny), bj = static_cast<Element>(b % ny);
      meet[a * m + b] = static_cast<Element>(x.meet(ai, bi) * ny + y.meet(aj, bj));
      join[a * m + b] = static_cast<Element>(x.join(ai, bi) * ny + y.join(aj, bj));
    }
  }
  return FiniteLattice::assemble(std::move(names), std::move(meet), std::move(join),
                                 static_cast<Element>(x.bottom() * ny + y.bottom()),
                                 static_cast<Element>(x.top() * ny + y.top()));
}

LatticeMorphism product_projection(std::shared_ptr<const FiniteLattice> prod, std::shared_ptr<const FiniteLattice> x,
                                   std::shared_ptr<const FiniteLattice> y, int which) {
  const std::size_t ny = y->size();
  std::vector<Element> map(prod->size());
  for (std::size_t k = 0; k < map.size(); ++k)
    map[k] = static_cast<Element>(which == 0 ? k / ny : k % ny);
  return LatticeMorphism{std::move(prod), which == 0 ? std::move(x) : std::move(y), std::move(map)};
}

}  // namespace measlat
