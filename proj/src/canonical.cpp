#include "measlat/canonical.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace measlat {

namespace {

using Colors = std::vector<std::uint32_t>;
using Signature = std::tuple<std::uint32_t, std::vector<std::uint32_t>, std::vector<std::uint32_t>>;

std::size_t relabel(const std::vector<Signature>& sigs, Colors& colors) {
  std::vector<Signature> sorted = sigs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t x = 0; x < sigs.size(); ++x) {
    colors[x] = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), sigs[x]) - sorted.begin());
  }
  return sorted.size();
}

void refine(const FiniteLattice& lat, Colors& colors) {
  const std::size_t n = lat.size();
  std::size_t classes = 0;
  std::vector<Signature> sigs(n);
  while (true) {
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<std::uint32_t> up, down;
      for (Element y : lat.upper_covers(static_cast<Element>(x))) up.push_back(colors[y]);
      for (Element y : lat.lower_covers(static_cast<Element>(x))) down.push_back(colors[y]);
      std::sort(up.begin(), up.end());
      std::sort(down.begin(), down.end());
      sigs[x] = Signature{colors[x], std::move(up), std::move(down)};
    }
    const std::size_t next = relabel(sigs, colors);
    if (next == classes) return;
    classes = next;
  }
}

struct Search {
  const FiniteLattice& lat;
  std::optional<CanonicalForm> best;

  void run(Colors colors) {
    refine(lat, colors);
    const std::size_t n = lat.size();
    std::map<std::uint32_t, std::vector<Element>> cells;
    for (std::size_t x = 0; x < n; ++x) cells[colors[x]].push_back(static_cast<Element>(x));
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.second.size() > 1; });
    if (target == cells.end()) {
      leaf(colors);
      return;
    }
    const std::uint32_t cell = target->first;
    for (Element v : target->second) {
      Colors next(n);
      for (std::size_t x = 0; x < n; ++x) next[x] = 2 * colors[x] + ((colors[x] == cell && x != v) ? 1U : 0U);
      run(std::move(next));
    }
  }

  void leaf(const Colors& colors) {
    const std::size_t n = lat.size();
    CanonicalForm form;
    form.size = n;
    form.labeling.resize(n);
    for (std::size_t x = 0; x < n; ++x) form.labeling[colors[x]] = static_cast<Element>(x);
    form.order_bits.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) form.order_bits[i * n + j] = lat.leq(form.labeling[i], form.labeling[j]);
    if (!best || form.order_bits < best->order_bits) best = std::move(form);
  }
};

}  // namespace

std::string CanonicalForm::id() const {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = std::to_string(size) + ":";
  unsigned nibble = 0, bits = 0;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      nibble = (nibble << 1) | order_bits[i * size + j];
      if (++bits == 4) {
        out += kHex[nibble];
        nibble = bits = 0;
      }
    }
  }
  if (bits != 0) out += kHex[nibble << (4 - bits)];
  return out;
}

CanonicalForm canonical_form(const FiniteLattice& lat) {
  const std::size_t n = lat.size();
  std::vector<Signature> sigs(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto e = static_cast<Element>(x);
    sigs[x] = Signature{static_cast<std::uint32_t>(lat.height(e)),
                        {static_cast<std::uint32_t>(lat.upper_covers(e).size())},
                        {static_cast<std::uint32_t>(lat.lower_covers(e).size())}};
  }
  Colors colors(n);
  relabel(sigs, colors);
  Search search{lat, std::nullopt};
  search.run(std::move(colors));
  return std::move(*search.best);
}

std::optional<std::vector<Element>> find_isomorphism(const FiniteLattice& x, const FiniteLattice& y) {
  if (x.size() != y.size() || x.covers().size() != y.covers().size()) return std::nullopt;
  const CanonicalForm cx = canonical_form(x);
  const CanonicalForm cy = canonical_form(y);
  if (!(cx == cy)) return std::nullopt;
  std::vector<Element> map(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) map[cx.labeling[i]] = cy.labeling[i];
  return map;
}

bool are_isomorphic(const FiniteLattice& x, const FiniteLattice& y) { return find_isomorphism(x, y).has_value(); }

}  // namespace measlat
