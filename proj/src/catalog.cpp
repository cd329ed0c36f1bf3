#include "measlat/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "measlat/error.hpp"
#include "measlat/spectrum.hpp"

namespace measlat {

namespace {

FiniteLattice from_text_covers(const std::string& elements, const std::vector<std::pair<std::string, std::string>>& covers) {
  std::vector<std::string> names;
  std::string current;
  for (char c : elements + " ") {
    if (c == ' ') {
      if (!current.empty()) names.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  return FiniteLattice::from_covers(names, covers);
}

std::optional<std::size_t> parameter(const std::string& name, const std::string& family) {
  if (name.size() < family.size() + 3 || name.compare(0, family.size() + 1, family + "(") != 0 || name.back() != ')')
    return std::nullopt;
  std::size_t k = 0;
  const char* first = name.data() + family.size() + 1;
  const char* last = name.data() + name.size() - 1;
  auto [ptr, ec] = std::from_chars(first, last, k);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return k;
}

}  // namespace

std::vector<std::string> fixed_names() { return {"m2", "m3", "n5", "hexagon9", "x7"}; }

CatalogEntry named(const std::string& name) {
  if (name == "m3") {
    return {name, from_text_covers("0 x1 x2 x3 1", {{"0", "x1"}, {"0", "x2"}, {"0", "x3"}, {"x1", "1"}, {"x2", "1"}, {"x3", "1"}}), 0};
  }
  if (name == "m2") return {name, from_text_covers("0 a b 1", {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}), 2};
  if (name == "n5") {
    return {name, from_text_covers("0 a b c 1", {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}}), 2};
  }
  if (name == "hexagon9") {
    // Bottom under two atoms; three coatoms, the middle one above both atoms.
    return {name,
            from_text_covers("0 a b l m r 1", {{"0", "a"}, {"0", "b"}, {"a", "l"}, {"a", "m"}, {"b", "m"}, {"b", "r"},
                                               {"l", "1"}, {"m", "1"}, {"r", "1"}}),
            2};
  }
  if (name == "x7") {
    // An M3 interval [x0, x4] in parallel with a single element y.
    return {name,
            from_text_covers("0 x0 x1 x2 x3 x4 y 1", {{"0", "x0"}, {"x0", "x1"}, {"x0", "x2"}, {"x0", "x3"}, {"x1", "x4"},
                                                      {"x2", "x4"}, {"x3", "x4"}, {"x4", "1"}, {"0", "y"}, {"y", "1"}}),
            2};
  }
  if (auto k = parameter(name, "chain")) return {name, chain(*k), *k};
  if (auto k = parameter(name, "powerset")) return {name, powerset(*k), *k};
  throw Error(ErrorKind::UnknownName, "unknown catalog lattice '" + name + "'");
}

std::vector<FiniteLattice> enumerate_all(std::size_t size) {
  if (size > kMaxEnumerationSize) {
    throw Error(ErrorKind::CapExceeded, "enumeration is limited to " + std::to_string(kMaxEnumerationSize) + " elements");
  }
  if (size == 0) return {};
  if (size == 1) return {FiniteLattice::from_relation({"0"}, {})};

  // Naturally labelled posets on the inner elements (i < j in the order
  // implies i < j as indices), each extended by a new bottom and top.
  const std::size_t inner = size - 2;
  std::map<CanonicalForm, FiniteLattice> classes;
  std::vector<std::uint32_t> below(inner, 0);  // strict down-set bitmask
  std::vector<std::string> names{"0"};
  for (std::size_t i = 1; i <= inner; ++i) names.push_back("x" + std::to_string(i));
  names.push_back("1");

  auto emit = [&]() {
    std::vector<FiniteLattice::Cover> relation;
    const auto top = static_cast<Element>(inner + 1);
    for (std::size_t j = 0; j < inner; ++j) {
      relation.emplace_back(0, static_cast<Element>(j + 1));
      relation.emplace_back(static_cast<Element>(j + 1), top);
      for (std::size_t i = 0; i < j; ++i)
        if ((below[j] >> i) & 1U) relation.emplace_back(static_cast<Element>(i + 1), static_cast<Element>(j + 1));
    }
    if (inner == 0) relation.emplace_back(0, top);
    try {
      FiniteLattice lat = FiniteLattice::from_relation(names, relation);
      classes.try_emplace(canonical_form(lat), std::move(lat));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotALattice) throw;
    }
  };
  auto descend = [&](auto&& self, std::size_t j) -> void {
    if (j == inner) {
      emit();
      return;
    }
    for (std::uint32_t s = 0; s < (1U << j); ++s) {
      bool closed = true;
      for (std::size_t i = 0; i < j && closed; ++i)
        if ((s >> i) & 1U) closed = (below[i] & ~s) == 0;
      if (!closed) continue;
      below[j] = s;
      self(self, j + 1);
    }
  };
  descend(descend, 0);

  std::vector<FiniteLattice> out;
  for (auto& [form, lat] : classes) out.push_back(std::move(lat));
  return out;
}

std::vector<TableRow> table(std::size_t max_size) {
  std::vector<TableRow> rows;
  for (std::size_t size = 1; size <= max_size; ++size) {
    for (auto& lat : enumerate_all(size)) {
      TableRow row{size, canonical_form(lat).id(), measurability(lat), std::move(lat)};
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

MeasurabilityMultisets multisets(const std::vector<TableRow>& rows) {
  MeasurabilityMultisets out;
  for (const auto& row : rows) out[row.size].push_back(row.n);
  for (auto& [size, values] : out) std::sort(values.begin(), values.end());
  return out;
}

const MeasurabilityMultisets& reference_multisets() {
  // The published list runs over the Hasse diagrams of all lattices with at
  // most six elements, in the order 1, 2, 3, 4, 4, 5 x5, 6 x15:
  //   0,1,2,3,2,4,3,3,0,2 / 5,4,4,4,3,3,1,1,2 / 2,1,1,3,0,0
  static const MeasurabilityMultisets reference = [] {
    const std::vector<std::size_t> sizes{1, 2, 3, 4, 4, 5, 5, 5, 5, 5, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6};
    const std::vector<std::size_t> values{0, 1, 2, 3, 2, 4, 3, 3, 0, 2, 5, 4, 4, 4, 3, 3, 1, 1, 2, 2, 1, 1, 3, 0, 0};
    MeasurabilityMultisets m;
    for (std::size_t i = 0; i < sizes.size(); ++i) m[sizes[i]].push_back(values[i]);
    for (auto& [size, v] : m) std::sort(v.begin(), v.end());
    return m;
  }();
  return reference;
}

FiniteLattice random_lattice(std::mt19937_64& rng, std::size_t max_size) {
  if (max_size == 0) throw Error(ErrorKind::CapExceeded, "max_size must be positive");
  std::uniform_int_distribution<int> ground_dist(2, 5);
  while (true) {
    const int ground = ground_dist(rng);
    const std::uint32_t full = (1U << ground) - 1;
    std::uniform_int_distribution<std::uint32_t> mask_dist(0, full);
    std::uniform_int_distribution<int> count_dist(0, 6);
    std::set<std::uint32_t> family{full};
    const int count = count_dist(rng);
    for (int i = 0; i < count; ++i) family.insert(mask_dist(rng));
    // Intersection closure; the result is a lattice with meet = intersection.
    bool grew = true;
    while (grew) {
      grew = false;
      const std::vector<std::uint32_t> snapshot(family.begin(), family.end());
      for (auto a : snapshot)
        for (auto b : snapshot) grew = family.insert(a & b).second || grew;
    }
    if (family.size() > max_size) continue;

    const std::vector<std::uint32_t> sets(family.begin(), family.end());
    std::vector<std::string> names;
    std::vector<FiniteLattice::Cover> relation;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      names.push_back("e" + std::to_string(i));
      for (std::size_t j = 0; j < sets.size(); ++j)
        if (i != j && (sets[i] & ~sets[j]) == 0) relation.emplace_back(static_cast<Element>(i), static_cast<Element>(j));
    }
    return FiniteLattice::from_relation(std::move(names), relation);
  }
}

}  // namespace measlat
