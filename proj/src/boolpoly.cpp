#include "measlat/boolpoly.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace measlat {

BoolMonomial BoolMonomial::variable(std::size_t v) {
  if (v >= kMaxVariables) throw std::out_of_range("BoolMonomial supports at most 256 variables");
  BoolMonomial m;
  m.bits_[v / 64] |= std::uint64_t{1} << (v % 64);
  return m;
}

BoolMonomial BoolMonomial::from_variables(const std::vector<std::size_t>& vars) {
  BoolMonomial m;
  for (std::size_t v : vars) m = m * variable(v);
  return m;
}

std::size_t BoolMonomial::degree() const noexcept {
  std::size_t d = 0;
  for (auto w : bits_) d += std::popcount(w);
  return d;
}

std::vector<std::size_t> BoolMonomial::variables() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < bits_.size(); ++w)
    for (auto word = bits_[w]; word != 0; word &= word - 1) out.push_back(w * 64 + std::countr_zero(word));
  return out;
}

bool BoolMonomial::divides(const BoolMonomial& other) const noexcept {
  for (std::size_t w = 0; w < bits_.size(); ++w)
    if (bits_[w] & ~other.bits_[w]) return false;
  return true;
}

bool BoolMonomial::coprime(const BoolMonomial& other) const noexcept {
  for (std::size_t w = 0; w < bits_.size(); ++w)
    if (bits_[w] & other.bits_[w]) return false;
  return true;
}

BoolMonomial BoolMonomial::operator*(const BoolMonomial& other) const noexcept {
  BoolMonomial m;
  for (std::size_t w = 0; w < bits_.size(); ++w) m.bits_[w] = bits_[w] | other.bits_[w];
  return m;
}

BoolMonomial BoolMonomial::without(const BoolMonomial& other) const noexcept {
  BoolMonomial m;
  for (std::size_t w = 0; w < bits_.size(); ++w) m.bits_[w] = bits_[w] & ~other.bits_[w];
  return m;
}

BoolMonomial BoolMonomial::with(std::size_t v) const noexcept {
  BoolMonomial m = *this;
  m.bits_[v / 64] |= std::uint64_t{1} << (v % 64);
  return m;
}

std::strong_ordering operator<=>(const BoolMonomial& a, const BoolMonomial& b) noexcept {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t w = a.bits_.size(); w-- > 0;) {
    const std::uint64_t diff = a.bits_[w] ^ b.bits_[w];
    if (diff == 0) continue;
    const std::uint64_t high = std::uint64_t{1} << (63 - std::countl_zero(diff));
    return (a.bits_[w] & high) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t BoolMonomial::hash() const noexcept {
  std::size_t h = 0;
  for (auto w : bits_) h = h * 1000003U ^ std::hash<std::uint64_t>{}(w);
  return h;
}

void BoolPoly::normalize(std::vector<BoolMonomial>& terms) {
  std::sort(terms.begin(), terms.end(), std::greater<>{});
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) terms[out++] = terms[i];
    i = j;
  }
  terms.resize(out);
}

BoolPoly BoolPoly::from_terms(std::vector<BoolMonomial> terms) {
  BoolPoly p;
  normalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

BoolPoly BoolPoly::operator+(const BoolPoly& other) const {
  BoolPoly r;
  r.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin(), b = other.terms_.begin();
  while (a != terms_.end() && b != other.terms_.end()) {
    if (*a == *b) {
      ++a;
      ++b;
    } else if (*a > *b) {
      r.terms_.push_back(*a++);
    } else {
      r.terms_.push_back(*b++);
    }
  }
  r.terms_.insert(r.terms_.end(), a, terms_.end());
  r.terms_.insert(r.terms_.end(), b, other.terms_.end());
  return r;
}

BoolPoly& BoolPoly::operator+=(const BoolPoly& other) { return *this = *this + other; }

BoolPoly BoolPoly::operator*(const BoolMonomial& m) const {
  std::vector<BoolMonomial> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back(t * m);
  return from_terms(std::move(terms));
}

BoolPoly BoolPoly::operator*(const BoolPoly& other) const {
  std::vector<BoolMonomial> terms;
  terms.reserve(terms_.size() * other.terms_.size());
  for (const auto& s : terms_)
    for (const auto& t : other.terms_) terms.push_back(s * t);
  return from_terms(std::move(terms));
}

bool BoolPoly::evaluate(const std::vector<std::uint8_t>& assignment) const {
  bool value = false;
  for (const auto& t : terms_) {
    bool term = true;
    for (std::size_t v : t.variables()) term = term && assignment.at(v) != 0;
    value ^= term;
  }
  return value;
}

std::string BoolPoly::to_string(const std::vector<std::string>& variable_names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.is_one()) {
      out += "1";
      continue;
    }
    std::string mono;
    for (std::size_t v : t.variables()) {
      if (!mono.empty()) mono += "*";
      std::string name = v < variable_names.size() ? variable_names[v] : "x" + std::to_string(v);
      // Names like "0" or "1" would read as constants.
      if (!name.empty() && name[0] >= '0' && name[0] <= '9') name = "[" + name + "]";
      mono += name;
    }
    out += mono;
  }
  return out;
}

}  // namespace measlat
