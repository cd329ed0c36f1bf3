#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <json.hpp>
#include <memory>
#include <optional>
#include <sstream>

#include "measlat/measlat.hpp"

namespace measlat::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { text, json, tsv };

struct Options {
  Format format = Format::text;
  std::optional<std::size_t> max_subset_size;
  std::uint64_t seed = 0;
};

struct Loaded {
  std::string name;
  std::shared_ptr<const FiniteLattice> lattice;
};

// Domain error annotated with the file it came from.
struct FileError {
  std::string path;
  Error error;
};

Loaded load(const std::string& path) {
  const std::string text = io::read_text_file(path);
  try {
    io::LatticeFile file = io::parse_lattice(text);
    auto lat = std::make_shared<const FiniteLattice>(io::to_lattice(file));
    std::string name = file.name.empty() ? std::filesystem::path(path).stem().string() : file.name;
    return {std::move(name), std::move(lat)};
  } catch (const Error& e) {
    throw FileError{path, e};
  }
}

Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> ones(const FiniteLattice& lat, const TwoValuedPoint& p) {
  std::vector<std::string> names;
  for (Element x = 0; x < lat.size(); ++x)
    if (p(x)) names.push_back(lat.name(x));
  return names;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

// --- subcommands -----------------------------------------------------------

int cmd_check(const Options& opt, const std::string& path, std::ostream& out) {
  auto [name, lat] = load(path);
  const bool distributive = is_distributive(*lat);
  const bool boolean = distributive && is_complemented(*lat);
  if (opt.format == Format::json) {
    emit_json(out, Json{{"lattice", name},
                        {"ok", true},
                        {"size", lat->size()},
                        {"covers", lat->covers().size()},
                        {"bottom", lat->name(lat->bottom())},
                        {"top", lat->name(lat->top())},
                        {"distributive", distributive},
                        {"boolean", boolean}});
  } else if (opt.format == Format::tsv) {
    out << "lattice\tsize\tcovers\tdistributive\tboolean\n"
        << name << '\t' << lat->size() << '\t' << lat->covers().size() << '\t' << distributive << '\t' << boolean
        << '\n';
  } else {
    out << name << ": lattice with " << lat->size() << " elements, " << lat->covers().size() << " covers, bottom "
        << lat->name(lat->bottom()) << ", top " << lat->name(lat->top())
        << (boolean ? ", boolean" : distributive ? ", distributive" : "") << '\n';
  }
  return 0;
}

int cmd_n(const Options& opt, const std::string& path, const std::string& method, std::ostream& out) {
  auto [name, lat] = load(path);
  Json methods = Json::object();
  if (method == "points" || method == "all") methods["points"] = measurability(*lat);
  if (method == "groebner" || method == "all") methods["groebner"] = groebner_measurability(*lat);
  if (method == "nullspace" || method == "all")
    methods["nullspace"] = nullspace_dimension(constraint_matrix(*lat, opt.max_subset_size));

  const auto first = methods.begin()->get<std::size_t>();
  bool agree = true;
  for (const auto& [k, v] : methods.items()) agree = agree && v.get<std::size_t>() == first;
  if (!agree) {
    std::ostringstream msg;
    msg << "methods disagree on '" << name << "':";
    for (const auto& [k, v] : methods.items()) msg << ' ' << k << '=' << v.get<std::size_t>();
    throw Error(ErrorKind::MethodDisagreement, msg.str());
  }

  if (opt.format == Format::json) {
    Json j{{"lattice", name}, {"n", first}};
    if (method == "all") {
      j["methods"] = methods;
      j["agree"] = true;
    }
    emit_json(out, j);
  } else if (opt.format == Format::tsv) {
    out << "lattice\tmethod\tn\n";
    for (const auto& [k, v] : methods.items()) out << name << '\t' << k << '\t' << v.get<std::size_t>() << '\n';
  } else {
    out << name << ": n = " << first;
    if (method == "all") out << " (points, groebner and nullspace agree)";
    out << '\n';
  }
  return 0;
}

int cmd_points(const Options& opt, const std::string& path, std::ostream& out) {
  auto [name, lat] = load(path);
  const Spectrum spec = enumerate_points(*lat);
  if (opt.format == Format::json) {
    Json points = Json::array();
    for (std::size_t i = 0; i < spec.size(); ++i)
      points.push_back(Json{{"point_index", i}, {"ones", ones(*lat, spec.points[i])}});
    emit_json(out, Json{{"lattice", name}, {"n", spec.size()}, {"points", points}});
  } else if (opt.format == Format::tsv) {
    out << "point_index\tones\n";
    for (std::size_t i = 0; i < spec.size(); ++i) out << i << '\t' << join(ones(*lat, spec.points[i]), ",") << '\n';
  } else {
    out << name << ": " << spec.size() << " two-valued point" << (spec.size() == 1 ? "" : "s") << '\n';
    for (std::size_t i = 0; i < spec.size(); ++i)
      out << "  p" << i << " = 1 on {" << join(ones(*lat, spec.points[i]), ", ") << "}\n";
  }
  return 0;
}

int cmd_universal(const Options& opt, const std::string& path, std::ostream& out) {
  auto [name, lat] = load(path);
  const UniversalMeasure um = universal_measure(*lat);
  if (opt.format == Format::json) {
    Json table = Json::object();
    for (Element x = 0; x < lat->size(); ++x) table[lat->name(x)] = um(x);
    emit_json(out, Json{{"lattice", name}, {"n", um.rank()}, {"table", table}});
    return 0;
  }
  out << "element";
  for (std::size_t i = 0; i < um.rank(); ++i) out << "\tp" << i;
  out << '\n';
  for (Element x = 0; x < lat->size(); ++x) {
    out << lat->name(x);
    for (int v : um(x)) out << '\t' << v;
    out << '\n';
  }
  return 0;
}

int cmd_hull(const Options& opt, const std::string& path, std::ostream& out) {
  auto [name, lat] = load(path);
  const BooleanHull h = hull(*lat);
  const GroebnerBasis gb = buchberger(build_ideal(*lat));
  if (auto violation = hull_violation(*lat, h, &gb)) throw Error(ErrorKind::MethodDisagreement, *violation);
  if (opt.format == Format::json) {
    Json d = Json::object();
    for (Element x = 0; x < lat->size(); ++x) d[lat->name(x)] = h.d_map[x];
    emit_json(out, Json{{"lattice", name}, {"points", h.points()}, {"d_map", d}});
  } else if (opt.format == Format::tsv) {
    out << "element\tpoints\n";
    for (Element x = 0; x < lat->size(); ++x) {
      std::vector<std::string> idx;
      for (auto i : h.d_map[x]) idx.push_back(std::to_string(i));
      out << lat->name(x) << '\t' << join(idx, ",") << '\n';
    }
  } else {
    out << name << ": Boolean hull on " << h.points() << " point" << (h.points() == 1 ? "" : "s") << '\n';
    for (Element x = 0; x < lat->size(); ++x) {
      std::vector<std::string> idx;
      for (auto i : h.d_map[x]) idx.push_back("p" + std::to_string(i));
      out << "  D(" << lat->name(x) << ") = {" << join(idx, ", ") << "}\n";
    }
  }
  return 0;
}

int cmd_ortho(const Options& opt, const std::string& path, const std::vector<std::string>& names, std::ostream& out) {
  auto [name, lat] = load(path);
  std::vector<Element> xs;
  for (const auto& n : names) xs.push_back(lat->index_of(n));
  const UniversalMeasure um = universal_measure(*lat);
  const auto ys = orthogonalize(um, xs);
  if (opt.format == Format::json) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < ys.size(); ++i) rows.push_back(Json{{"x", names[i]}, {"y", ys[i]}});
    emit_json(out, Json{{"lattice", name}, {"n", um.rank()}, {"idempotents", rows}});
    return 0;
  }
  if (opt.format == Format::tsv) {
    out << "index\tx";
    for (std::size_t i = 0; i < um.rank(); ++i) out << "\tp" << i;
    out << '\n';
  }
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (opt.format == Format::tsv) {
      out << i + 1 << '\t' << names[i];
      for (int v : ys[i]) out << '\t' << v;
    } else {
      out << "y" << i + 1 << " (" << names[i] << ") = (";
      for (std::size_t k = 0; k < ys[i].size(); ++k) out << (k ? ", " : "") << ys[i][k];
      out << ')';
    }
    out << '\n';
  }
  return 0;
}

int cmd_invariant(const Options& opt, const std::string& path, const std::string& group_path, std::ostream& out) {
  auto [name, lat] = load(path);
  std::vector<LatticeMorphism> gens;
  try {
    gens = io::parse_group(io::read_text_file(group_path), lat);
  } catch (const Error& e) {
    throw FileError{group_path, e};
  }
  const UniversalMeasure um = universal_measure(*lat);
  const InvariantMeasureSpace space = invariant_space(um, *lat, gens);
  const std::size_t check = nullspace_dimension(invariant_constraint_matrix(*lat, gens));
  if (check != space.dimension) {
    throw Error(ErrorKind::MethodDisagreement, "orbit count " + std::to_string(space.dimension) +
                                                   " differs from augmented nullspace dimension " +
                                                   std::to_string(check));
  }
  if (opt.format == Format::json) {
    Json basis = Json::array();
    for (const auto& v : space.basis) {
      Json row = Json::array();
      for (const auto& c : v) row.push_back(c.str());
      basis.push_back(row);
    }
    emit_json(out, Json{{"lattice", name},
                        {"n", um.rank()},
                        {"generators", gens.size()},
                        {"dimension", space.dimension},
                        {"orbits", space.orbits},
                        {"basis", basis}});
  } else if (opt.format == Format::tsv) {
    out << "orbit\tpoints\n";
    for (std::size_t i = 0; i < space.orbits.size(); ++i) {
      std::vector<std::string> idx;
      for (auto p : space.orbits[i]) idx.push_back(std::to_string(p));
      out << i << '\t' << join(idx, ",") << '\n';
    }
  } else {
    out << name << ": invariant measures form a space of dimension " << space.dimension << " (n = " << um.rank()
        << ", " << gens.size() << " generator" << (gens.size() == 1 ? "" : "s") << ")\n";
    for (const auto& orbit : space.orbits) {
      std::vector<std::string> idx;
      for (auto p : orbit) idx.push_back("p" + std::to_string(p));
      out << "  orbit {" << join(idx, ", ") << "}\n";
    }
  }
  return 0;
}

int cmd_product(const Options& opt, const std::string& a, const std::string& b, const std::string& output,
                std::ostream& out) {
  auto x = load(a);
  auto y = load(b);
  const FiniteLattice prod = product(*x.lattice, *y.lattice);
  const std::string name = x.name + "_x_" + y.name;
  io::write_text_file(output, io::serialize(io::to_file(prod, name)));
  if (opt.format == Format::json) {
    emit_json(out, Json{{"lattice", name}, {"output", output}, {"size", prod.size()}});
  } else if (opt.format == Format::tsv) {
    out << "lattice\toutput\tsize\n" << name << '\t' << output << '\t' << prod.size() << '\n';
  } else {
    out << "wrote " << name << " (" << prod.size() << " elements) to " << output << '\n';
  }
  return 0;
}

int cmd_snf(const Options& opt, const std::string& path, std::ostream& out) {
  auto [name, lat] = load(path);
  const ExactMatrix m = constraint_matrix(*lat, opt.max_subset_size);
  const SmithForm snf = smith_normal_form(m);
  if (opt.format == Format::json) {
    Json diag = Json::array();
    for (const auto& d : snf.diagonal) diag.push_back(integer_json(d));
    emit_json(out, Json{{"lattice", name},
                        {"rows", m.rows()},
                        {"cols", m.cols()},
                        {"rank", snf.rank},
                        {"diagonal", diag},
                        {"torsion_free", snf.torsion_free()},
                        {"n", m.cols() - snf.rank}});
  } else if (opt.format == Format::tsv) {
    out << to_tsv(m);
  } else {
    std::vector<std::string> diag;
    for (const auto& d : snf.diagonal) diag.push_back(d.str());
    out << name << ": " << m.rows() << "x" << m.cols() << " constraint matrix, rank " << snf.rank
        << ", elementary divisors [" << join(diag, ", ") << "], "
        << (snf.torsion_free() ? "torsion-free" : "has torsion") << '\n';
  }
  return 0;
}

int cmd_catalog(const Options& opt, std::optional<std::size_t> size, const std::optional<std::string>& show,
                std::ostream& out) {
  if (show) {
    const CatalogEntry entry = named(*show);
    std::string file_name;
    for (char c : entry.name) file_name += io::is_identifier(std::string(1, c)) ? c : '_';
    while (!file_name.empty() && file_name.back() == '_') file_name.pop_back();
    out << io::serialize(io::to_file(entry.lattice, file_name));
    return 0;
  }
  struct Row {
    std::string label;
    std::size_t size;
    std::string id;
    std::size_t n;
    std::optional<std::size_t> expected;
  };
  std::vector<Row> rows;
  if (size) {
    for (const auto& lat : enumerate_all(*size))
      rows.push_back({"", lat.size(), canonical_form(lat).id(), measurability(lat), std::nullopt});
  } else {
    for (const auto& name : fixed_names()) {
      const CatalogEntry e = named(name);
      rows.push_back({e.name, e.lattice.size(), canonical_form(e.lattice).id(), measurability(e.lattice), e.expected_n});
    }
  }
  if (opt.format == Format::json) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json j = Json::object();
      if (!r.label.empty()) j["name"] = r.label;
      j["size"] = r.size;
      j["id"] = r.id;
      j["n"] = r.n;
      if (r.expected) j["expected_n"] = *r.expected;
      arr.push_back(j);
    }
    emit_json(out, Json{{"lattices", arr}});
  } else {
    out << (size ? "size\tid\tn\n" : "name\tsize\tid\tn\texpected_n\n");
    for (const auto& r : rows) {
      if (!size) out << r.label << '\t';
      out << r.size << '\t' << r.id << '\t' << r.n;
      if (!size) out << '\t' << (r.expected ? std::to_string(*r.expected) : "-");
      out << '\n';
    }
  }
  return 0;
}

int cmd_table(const Options& opt, std::ostream& out) {
  const auto rows = table(6);
  const auto sets = multisets(rows);
  const bool matches = sets == reference_multisets();
  if (opt.format == Format::json) {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(Json{{"size", r.size}, {"id", r.canonical_id}, {"n", r.n}});
    Json ms = Json::object();
    for (const auto& [s, v] : sets) ms[std::to_string(s)] = v;
    emit_json(out, Json{{"count", rows.size()}, {"rows", arr}, {"multisets", ms}, {"matches_reference", matches}});
  } else {
    out << "size\tid\tn\n";
    for (const auto& r : rows) out << r.size << '\t' << r.canonical_id << '\t' << r.n << '\n';
    if (opt.format == Format::text)
      out << "# " << rows.size() << " lattices; measurabilities " << (matches ? "match" : "DO NOT match")
          << " the reference table\n";
  }
  if (!matches) throw Error(ErrorKind::MethodDisagreement, "measurability table differs from the reference values");
  return 0;
}

int cmd_groebner(const Options& opt, const std::string& path, std::size_t trials, std::ostream& out) {
  auto [name, lat] = load(path);
  const GroebnerBasis gb = buchberger(build_ideal(*lat));
  const auto standard = standard_monomials(gb);
  const BooleanRingCheck check = is_boolean_ring(gb, trials, opt.seed);
  std::vector<std::string> basis;
  for (const auto& g : gb.basis) basis.push_back(g.to_string(lat->names()));
  std::vector<std::string> monomials;
  for (const auto& m : standard) monomials.push_back(BoolPoly::from_terms({m}).to_string(lat->names()));
  if (opt.format == Format::json) {
    Json j{{"lattice", name},      {"order", GroebnerBasis::order}, {"basis", basis},
           {"standard", monomials}, {"n", standard.size()},        {"seed", opt.seed},
           {"trials", trials},     {"idempotent", check.ok}};
    if (check.witness) j["witness"] = check.witness->to_string(lat->names());
    emit_json(out, j);
  } else if (opt.format == Format::tsv) {
    out << "kind\tpolynomial\n";
    for (const auto& g : basis) out << "basis\t" << g << '\n';
    for (const auto& m : monomials) out << "standard\t" << m << '\n';
  } else {
    out << name << ": reduced Groebner basis (" << GroebnerBasis::order << ", " << basis.size() << " polynomials)\n";
    for (const auto& g : basis) out << "  " << g << '\n';
    out << "standard monomials (" << monomials.size() << "): " << join(monomials, ", ") << '\n';
    out << "p^2 = p on " << trials << " random polynomials (seed " << opt.seed << "): " << (check.ok ? "yes" : "NO")
        << '\n';
  }
  if (!check.ok) throw Error(ErrorKind::NotBoolean, "normal form of p^2 differs from p for " + check.witness->to_string(lat->names()));
  return 0;
}

void report_error(const Options& opt, std::ostream& out, std::ostream& err, const std::string& kind,
                  const std::string& message, const std::string& file, std::size_t line, std::size_t column) {
  if (opt.format == Format::json) {
    Json j{{"error", kind}, {"message", message}};
    if (!file.empty()) j["file"] = file;
    if (line) {
      j["line"] = line;
      j["column"] = column;
    }
    emit_json(out, j);
  } else {
    err << "error: " << (file.empty() ? "" : file + ": ") << message << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Measurability of finite bounded lattices"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"tsv", Format::tsv}};
  app.add_option("--format", opt.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--max-subset-size", opt.max_subset_size, "Largest subset used for inclusion-exclusion rows")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  app.add_option("--seed", opt.seed, "Seed for randomized checks");

  std::string file, file2, output, group, method = "all";
  std::vector<std::string> elements;
  std::optional<std::size_t> size;
  std::optional<std::string> show;
  std::size_t trials = 100;

  auto* check = app.add_subcommand("check", "Validate a lattice file");
  check->add_option("FILE", file)->required();
  auto* n = app.add_subcommand("n", "Compute the measurability n(X)");
  n->add_option("FILE", file)->required();
  n->add_option("--method", method, "points, groebner, nullspace or all")
      ->check(CLI::IsMember({"points", "groebner", "nullspace", "all"}));
  auto* points = app.add_subcommand("points", "List the two-valued points");
  points->add_option("FILE", file)->required();
  auto* universal = app.add_subcommand("universal", "Print the universal measure table");
  universal->add_option("FILE", file)->required();
  auto* hull_cmd = app.add_subcommand("hull", "Print the map D into the Boolean hull");
  hull_cmd->add_option("FILE", file)->required();
  auto* ortho = app.add_subcommand("ortho", "Orthogonal idempotents from a sequence of elements");
  ortho->add_option("FILE", file)->required();
  ortho->add_option("ELEMENTS", elements)->required();
  auto* invariant = app.add_subcommand("invariant", "Invariant measures under a group of automorphisms");
  invariant->add_option("FILE", file)->required();
  invariant->add_option("--group", group, "Group generator file")->required();
  auto* product_cmd = app.add_subcommand("product", "Write the product of two lattices");
  product_cmd->add_option("FILE1", file)->required();
  product_cmd->add_option("FILE2", file2)->required();
  product_cmd->add_option("-o,--output", output, "Output lattice file")->required();
  auto* snf = app.add_subcommand("snf", "Smith normal form of the constraint matrix");
  snf->add_option("FILE", file)->required();
  auto* catalog = app.add_subcommand("catalog", "Named lattices, or all lattices of a given size");
  catalog->add_option("--size", size, "Enumerate all lattices with this many elements");
  catalog->add_option("--show", show, "Print a named lattice in file format");
  auto* table_cmd = app.add_subcommand("table", "Measurabilities of all lattices with at most six elements");
  auto* groebner_cmd = app.add_subcommand("groebner", "Reduced Groebner basis and standard monomials over F2");
  groebner_cmd->add_option("FILE", file)->required();
  groebner_cmd->add_option("--trials", trials, "Random polynomials for the p^2 = p check");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(opt, file, out);
    if (*n) return cmd_n(opt, file, method, out);
    if (*points) return cmd_points(opt, file, out);
    if (*universal) return cmd_universal(opt, file, out);
    if (*hull_cmd) return cmd_hull(opt, file, out);
    if (*ortho) return cmd_ortho(opt, file, elements, out);
    if (*invariant) return cmd_invariant(opt, file, group, out);
    if (*product_cmd) return cmd_product(opt, file, file2, output, out);
    if (*snf) return cmd_snf(opt, file, out);
    if (*catalog) return cmd_catalog(opt, size, show, out);
    if (*table_cmd) return cmd_table(opt, out);
    if (*groebner_cmd) return cmd_groebner(opt, file, trials, out);
  } catch (const FileError& e) {
    report_error(opt, out, err, std::string(to_string(e.error.kind())), e.error.what(), e.path, e.error.line(),
                 e.error.column());
    return 1;
  } catch (const Error& e) {
    report_error(opt, out, err, std::string(to_string(e.kind())), e.what(), "", e.line(), e.column());
    return 1;
  } catch (const std::logic_error& e) {
    report_error(opt, out, err, "InternalError", e.what(), "", 0, 0);
    return 1;
  } catch (const std::runtime_error& e) {
    report_error(opt, out, err, "IoError", e.what(), "", 0, 0);
    return 1;
  }
  return 2;
}

}  // namespace measlat::cli
