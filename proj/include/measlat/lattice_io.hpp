#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "measlat/lattice.hpp"

namespace measlat::io {

/// Parsed lattice source. Grammar (one item per line, `#` starts a comment):
///
///     name: M3                 (optional)
///     elements: 0 a b c 1
///     covers:
///     0 < a
///     ...
struct LatticeFile {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;

  friend bool operator==(const LatticeFile&, const LatticeFile&) = default;
};

/// Throws Error{SyntaxError, DuplicateElement, UnknownElement} with line/column.
LatticeFile parse_lattice(std::string_view text);

/// Canonical text form; LF line endings, covers in file order.
std::string serialize(const LatticeFile& file);

LatticeFile to_file(const FiniteLattice& lat, std::string name);
FiniteLattice to_lattice(const LatticeFile& file, std::size_t size_cap = kDefaultSizeCap);

/// One generator per line: `perm: a->b b->a`; unlisted elements are fixed.
/// Each generator is verified to be an automorphism of `lat`.
/// Throws Error{SyntaxError, UnknownElement, NotAPermutation, NotAnAutomorphism}.
std::vector<LatticeMorphism> parse_group(std::string_view text, const std::shared_ptr<const FiniteLattice>& lat);

std::string serialize_group(const std::vector<LatticeMorphism>& generators);

bool is_identifier(std::string_view token);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace measlat::io
