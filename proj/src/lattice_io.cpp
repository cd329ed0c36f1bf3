#include "measlat/lattice_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "measlat/error.hpp"

namespace measlat::io {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::string_view text;  // comment and CR stripped
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  while (!text.empty() || number == 1) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    lines.push_back({number++, line});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<Token> tokenize(std::string_view line, std::size_t offset = 0) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), offset + start + 1});
  }
  return out;
}

bool blank(std::string_view s) { return s.find_first_not_of(" \t") == std::string_view::npos; }

/// Splits "key: rest" and returns the key, or an empty view if no colon.
std::string_view header_key(std::string_view line, std::size_t& rest_offset) {
  const auto colon = line.find(':');
  if (colon == std::string_view::npos) return {};
  std::string_view key = line.substr(0, colon);
  const auto first = key.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  key = key.substr(first);
  key = key.substr(0, key.find_last_not_of(" \t") + 1);
  rest_offset = colon + 1;
  return key;
}

}  // namespace

bool is_identifier(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

LatticeFile parse_lattice(std::string_view text) {
  LatticeFile file;
  bool have_elements = false;
  bool in_covers = false;
  std::unordered_map<std::string, std::size_t> declared;

  for (const Line& line : split_lines(text)) {
    if (blank(line.text)) continue;
    std::size_t rest = 0;
    const std::string_view key = header_key(line.text, rest);
    if (key == "name") {
      auto tokens = tokenize(line.text.substr(rest), rest);
      if (tokens.size() != 1 || !is_identifier(tokens[0].text))
        throw Error(ErrorKind::SyntaxError, "expected a single identifier after 'name:'", line.number, rest + 1);
      file.name = std::string(tokens[0].text);
      continue;
    }
    if (key == "elements") {
      if (have_elements) throw Error(ErrorKind::SyntaxError, "'elements:' declared twice", line.number, 1);
      have_elements = true;
      for (const Token& t : tokenize(line.text.substr(rest), rest)) {
        if (!is_identifier(t.text))
          throw Error(ErrorKind::SyntaxError, "invalid identifier '" + std::string(t.text) + "'", line.number, t.column);
        if (!declared.emplace(std::string(t.text), file.elements.size()).second)
          throw Error(ErrorKind::DuplicateElement, "duplicate element '" + std::string(t.text) + "'", line.number,
                      t.column);
        file.elements.emplace_back(t.text);
      }
      continue;
    }
    if (key == "covers") {
      if (!have_elements) throw Error(ErrorKind::SyntaxError, "'covers:' before 'elements:'", line.number, 1);
      if (in_covers) throw Error(ErrorKind::SyntaxError, "'covers:' declared twice", line.number, 1);
      if (!blank(line.text.substr(rest)))
        throw Error(ErrorKind::SyntaxError, "unexpected text after 'covers:'", line.number, rest + 1);
      in_covers = true;
      continue;
    }
    if (!in_covers) {
      throw Error(ErrorKind::SyntaxError, "expected 'name:', 'elements:' or 'covers:'", line.number,
                  line.text.find_first_not_of(" \t") + 1);
    }
    auto tokens = tokenize(line.text);
    if (tokens.size() != 3 || tokens[1].text != "<") {
      throw Error(ErrorKind::SyntaxError, "expected 'a < b'", line.number, tokens.empty() ? 1 : tokens[0].column);
    }
    for (const Token* t : {&tokens[0], &tokens[2]}) {
      if (!declared.contains(std::string(t->text)))
        throw Error(ErrorKind::UnknownElement, "unknown element '" + std::string(t->text) + "'", line.number,
                    t->column);
    }
    file.covers.emplace_back(std::string(tokens[0].text), std::string(tokens[2].text));
  }
  if (!have_elements) throw Error(ErrorKind::SyntaxError, "missing 'elements:' line", 1, 1);
  return file;
}

std::string serialize(const LatticeFile& file) {
  std::ostringstream out;
  if (!file.name.empty()) out << "name: " << file.name << '\n';
  out << "elements:";
  for (const auto& e : file.elements) out << ' ' << e;
  out << "\ncovers:\n";
  for (const auto& [a, b] : file.covers) out << a << " < " << b << '\n';
  return out.str();
}

LatticeFile to_file(const FiniteLattice& lat, std::string name) {
  LatticeFile file;
  file.name = std::move(name);
  file.elements = lat.names();
  for (auto [a, b] : lat.covers()) file.covers.emplace_back(lat.name(a), lat.name(b));
  return file;
}

FiniteLattice to_lattice(const LatticeFile& file, std::size_t size_cap) {
  return FiniteLattice::from_covers(file.elements, file.covers, size_cap);
}

std::vector<LatticeMorphism> parse_group(std::string_view text, const std::shared_ptr<const FiniteLattice>& lat) {
  std::vector<LatticeMorphism> generators;
  for (const Line& line : split_lines(text)) {
    if (blank(line.text)) continue;
    std::size_t rest = 0;
    if (header_key(line.text, rest) != "perm")
      throw Error(ErrorKind::SyntaxError, "expected 'perm:'", line.number, line.text.find_first_not_of(" \t") + 1);

    LatticeMorphism g = identity_morphism(lat);
    std::unordered_set<Element> assigned;
    for (const Token& t : tokenize(line.text.substr(rest), rest)) {
      const auto arrow = t.text.find("->");
      if (arrow == std::string_view::npos)
        throw Error(ErrorKind::SyntaxError, "expected 'a->b'", line.number, t.column);
      const std::string_view from = t.text.substr(0, arrow);
      const std::string_view to = t.text.substr(arrow + 2);
      if (!is_identifier(from) || !is_identifier(to))
        throw Error(ErrorKind::SyntaxError, "expected 'a->b'", line.number, t.column);
      auto a = lat->find(from);
      if (!a) throw Error(ErrorKind::UnknownElement, "unknown element '" + std::string(from) + "'", line.number, t.column);
      auto b = lat->find(to);
      if (!b)
        throw Error(ErrorKind::UnknownElement, "unknown element '" + std::string(to) + "'", line.number,
                    t.column + arrow + 2);
      if (!assigned.insert(*a).second)
        throw Error(ErrorKind::NotAPermutation, "element '" + std::string(from) + "' mapped twice", line.number,
                    t.column);
      g.map[*a] = *b;
    }
    std::vector<bool> hit(lat->size(), false);
    for (Element v : g.map) {
      if (hit[v]) throw Error(ErrorKind::NotAPermutation, "'" + lat->name(v) + "' has two preimages", line.number, 1);
      hit[v] = true;
    }
    if (auto why = morphism_violation(g)) throw Error(ErrorKind::NotAnAutomorphism, *why, line.number, 1);
    generators.push_back(std::move(g));
  }
  return generators;
}

std::string serialize_group(const std::vector<LatticeMorphism>& generators) {
  std::ostringstream out;
  for (const auto& g : generators) {
    out << "perm:";
    for (std::size_t x = 0; x < g.map.size(); ++x)
      if (g.map[x] != x) out << ' ' << g.source->name(static_cast<Element>(x)) << "->" << g.target->name(g.map[x]);
    out << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace measlat::io
