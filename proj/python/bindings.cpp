#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "measlat/measlat.hpp"

namespace py = pybind11;
using namespace measlat;

namespace {

using LatticePtr = std::shared_ptr<FiniteLattice>;

LatticePtr share(FiniteLattice lat) { return std::make_shared<FiniteLattice>(std::move(lat)); }

py::object fraction(const Rational& q) {
  py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(py::int_(py::str(numerator(q).str())), py::int_(py::str(denominator(q).str())));
}

py::int_ pyint(const Integer& z) { return py::int_(py::str(z.str())); }

Rational to_rational(const py::handle& v) {
  py::object q = py::module_::import("fractions").attr("Fraction")(v);
  return Rational(Integer(py::str(q.attr("numerator")).cast<std::string>()),
                  Integer(py::str(q.attr("denominator")).cast<std::string>()));
}

// Element -> value mapping given as a dict keyed by element name.
std::vector<Rational> values_from(const FiniteLattice& lat, const py::dict& values) {
  std::vector<Rational> out(lat.size());
  std::vector<bool> seen(lat.size(), false);
  for (auto [k, v] : values) {
    const Element x = lat.index_of(k.cast<std::string>());
    out[x] = to_rational(v);
    seen[x] = true;
  }
  for (Element x = 0; x < lat.size(); ++x)
    if (!seen[x]) throw Error(ErrorKind::DimensionMismatch, "no value given for '" + lat.name(x) + "'");
  return out;
}

py::dict by_name(const FiniteLattice& lat, const std::vector<Rational>& values) {
  py::dict d;
  for (Element x = 0; x < lat.size(); ++x) d[py::str(lat.name(x))] = fraction(values[x]);
  return d;
}

std::vector<std::string> names_of(const FiniteLattice& lat, const std::vector<Element>& xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(lat.name(x));
  return out;
}

std::size_t n_by_method(const FiniteLattice& lat, const std::string& method, std::optional<std::size_t> max_subset) {
  if (method == "points") return measurability(lat);
  if (method == "groebner") return groebner_measurability(lat);
  if (method == "nullspace") return nullspace_dimension(constraint_matrix(lat, max_subset));
  if (method == "all") {
    const std::size_t a = measurability(lat), b = groebner_measurability(lat),
                      c = nullspace_dimension(constraint_matrix(lat, max_subset));
    if (a != b || a != c) {
      throw Error(ErrorKind::MethodDisagreement, "points=" + std::to_string(a) + " groebner=" + std::to_string(b) +
                                                     " nullspace=" + std::to_string(c));
    }
    return a;
  }
  throw py::value_error("method must be one of points, groebner, nullspace, all");
}

}  // namespace

PYBIND11_MODULE(measlat, m) {
  m.doc() = "Measurability of finite bounded lattices";

  // Module-lifetime reference; the exception object carries the error kind.
  static PyObject* error_type = py::exception<Error>(m, "MeaslatError", PyExc_ValueError).inc_ref().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string kind(to_string(e.kind()));
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(kind + ": " + e.what());
      exc.attr("kind") = kind;
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  py::class_<FiniteLattice, LatticePtr>(m, "Lattice")
      .def(py::init([](const std::vector<std::string>& elements,
                       const std::vector<std::pair<std::string, std::string>>& covers) {
             return share(FiniteLattice::from_covers(elements, covers));
           }),
           py::arg("elements"), py::arg("covers"), "Build a lattice from its Hasse diagram (pairs lower, upper).")
      .def_static(
          "parse", [](const std::string& text) { return share(io::to_lattice(io::parse_lattice(text))); },
          py::arg("text"), "Parse the `elements:` / `covers:` text format.")
      .def("to_text", [](const FiniteLattice& l, const std::string& name) { return io::serialize(io::to_file(l, name)); },
           py::arg("name") = "")
      .def("__len__", &FiniteLattice::size)
      .def_property_readonly("names", &FiniteLattice::names)
      .def_property_readonly("bottom", [](const FiniteLattice& l) { return l.name(l.bottom()); })
      .def_property_readonly("top", [](const FiniteLattice& l) { return l.name(l.top()); })
      .def("leq", [](const FiniteLattice& l, const std::string& a, const std::string& b) {
        return l.leq(l.index_of(a), l.index_of(b));
      })
      .def("meet", [](const FiniteLattice& l, const std::string& a, const std::string& b) {
        return l.name(l.meet(l.index_of(a), l.index_of(b)));
      })
      .def("join", [](const FiniteLattice& l, const std::string& a, const std::string& b) {
        return l.name(l.join(l.index_of(a), l.index_of(b)));
      })
      .def("covers",
           [](const FiniteLattice& l) {
             std::vector<std::pair<std::string, std::string>> out;
             for (auto [a, b] : l.covers()) out.emplace_back(l.name(a), l.name(b));
             return out;
           })
      .def("is_distributive", [](const FiniteLattice& l) { return is_distributive(l); })
      .def("is_boolean", [](const FiniteLattice& l) { return is_boolean(l); })
      .def("canonical_id", [](const FiniteLattice& l) { return canonical_form(l).id(); })
      .def("__repr__", [](const FiniteLattice& l) { return "<Lattice with " + std::to_string(l.size()) + " elements>"; });

  m.def("named", [](const std::string& name) { return share(named(name).lattice); }, py::arg("name"),
        "Catalog lattice: m2, m3, n5, hexagon9, x7, chain(k), powerset(k).");
  m.def("expected_n", [](const std::string& name) { return named(name).expected_n; }, py::arg("name"));
  m.def("chain", [](std::size_t n) { return share(chain(n)); }, py::arg("n"));
  m.def("powerset", [](std::size_t n) { return share(powerset(n)); }, py::arg("n"));
  m.def("product", [](const FiniteLattice& a, const FiniteLattice& b) { return share(product(a, b)); });
  m.def("are_isomorphic", &are_isomorphic);
  m.def("enumerate_all", [](std::size_t size) {
    std::vector<LatticePtr> out;
    for (auto& l : enumerate_all(size)) out.push_back(share(std::move(l)));
    return out;
  }, py::arg("size"), "All lattices with exactly `size` elements, up to isomorphism.");
  m.def("table", [](std::size_t max_size) {
    std::vector<std::tuple<std::size_t, std::string, std::size_t>> out;
    for (const auto& r : table(max_size)) out.emplace_back(r.size, r.canonical_id, r.n);
    return out;
  }, py::arg("max_size") = 6, "Rows (size, canonical id, n) for every lattice up to `max_size` elements.");
  m.def("reference_multisets", &reference_multisets);

  m.def("measurability", &n_by_method, py::arg("lattice"), py::arg("method") = "points",
        py::arg("max_subset_size") = py::none());
  m.def("points", [](const FiniteLattice& l) {
    std::vector<std::vector<std::string>> out;
    for (const auto& p : enumerate_points(l).points) {
      std::vector<std::string> ones;
      for (Element x = 0; x < l.size(); ++x)
        if (p(x)) ones.push_back(l.name(x));
      out.push_back(std::move(ones));
    }
    return out;
  }, "Two-valued points, each given as the set of elements mapped to 1.");
  m.def("universal_measure", [](const FiniteLattice& l) {
    const UniversalMeasure um = universal_measure(l);
    py::dict d;
    for (Element x = 0; x < l.size(); ++x) d[py::str(l.name(x))] = um(x);
    return d;
  });

  m.def("groebner_basis", [](const FiniteLattice& l) {
    std::vector<std::string> out;
    for (const auto& g : buchberger(build_ideal(l)).basis) out.push_back(g.to_string(l.names()));
    return out;
  });
  m.def("standard_monomials", [](const FiniteLattice& l) {
    std::vector<std::string> out;
    for (const auto& s : standard_monomials(buchberger(build_ideal(l))))
      out.push_back(BoolPoly::from_terms({s}).to_string(l.names()));
    return out;
  });
  m.def("is_boolean_ring", [](const FiniteLattice& l, std::size_t trials, std::uint64_t seed) {
    return is_boolean_ring(buchberger(build_ideal(l)), trials, seed).ok;
  }, py::arg("lattice"), py::arg("trials") = 100, py::arg("seed") = 0);

  m.def("constraint_rank", [](const FiniteLattice& l, std::optional<std::size_t> k) {
    return rank(constraint_matrix(l, k));
  }, py::arg("lattice"), py::arg("max_subset_size") = py::none());
  m.def("smith_normal_form", [](const FiniteLattice& l, std::optional<std::size_t> k) {
    std::vector<py::int_> out;
    for (const auto& d : smith_normal_form(constraint_matrix(l, k)).diagonal) out.push_back(pyint(d));
    return out;
  }, py::arg("lattice"), py::arg("max_subset_size") = py::none(),
        "Nonzero elementary divisors of the inclusion-exclusion constraint matrix.");

  m.def("make_measure", [](const FiniteLattice& l, const py::list& coefficients) {
    std::vector<Rational> c;
    for (auto v : coefficients) c.push_back(to_rational(v));
    return by_name(l, make_measure(universal_measure(l), c).values);
  }, py::arg("lattice"), py::arg("coefficients"));
  m.def("solve_membership", [](const FiniteLattice& l, const py::dict& values) {
    py::list out;
    for (const auto& c : solve_membership(universal_measure(l), values_from(l, values))) out.append(fraction(c));
    return out;
  }, py::arg("lattice"), py::arg("values"));
  m.def("check_measure", [](const FiniteLattice& l, const py::dict& values, std::optional<std::size_t> k) {
    const MeasureVerdict v = check_measure(l, values_from(l, values), k);
    return py::make_tuple(v.ok, names_of(l, v.witness));
  }, py::arg("lattice"), py::arg("values"), py::arg("max_subset_size") = py::none(),
        "Returns (ok, witness subset).");
  m.def("nn_split", [](const FiniteLattice& l, const py::dict& values) {
    const NNSplit s = nn_split(l, values_from(l, values));
    return py::make_tuple(by_name(l, s.measure.values), fraction(s.constant));
  }, py::arg("lattice"), py::arg("values"));
  m.def("orthogonalize", [](const FiniteLattice& l, const std::vector<std::string>& xs) {
    std::vector<Element> idx;
    for (const auto& x : xs) idx.push_back(l.index_of(x));
    return orthogonalize(universal_measure(l), idx);
  }, py::arg("lattice"), py::arg("elements"));
  m.def("invariant_space", [](const LatticePtr& l, const std::string& group_text) {
    const auto gens = io::parse_group(group_text, l);
    const InvariantMeasureSpace s = invariant_space(universal_measure(*l), *l, gens);
    return py::make_tuple(s.dimension, s.orbits);
  }, py::arg("lattice"), py::arg("group"), "Returns (dimension, orbits of points) for `perm:` generator lines.");

  m.def("hull", [](const FiniteLattice& l) {
    const BooleanHull h = hull(l);
    py::dict d;
    for (Element x = 0; x < l.size(); ++x) d[py::str(l.name(x))] = h.d_map[x];
    return d;
  }, "The map D: element -> sorted point indices.");
  m.def("hull_violation", [](const FiniteLattice& l) {
    const GroebnerBasis gb = buchberger(build_ideal(l));
    return hull_violation(l, hull(l), &gb);
  });
  m.def("verify_universal_property", [](const FiniteLattice& l, const FiniteLattice& target) {
    return verify_universal_property(l, target).ok;
  });
  m.def("boolean_ring_structure", [](const FiniteLattice& l) { return boolean_ring_structure(l).ok; });
}
