#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quadlin/catalog.hpp"
#include "quadlin/criteria.hpp"
#include "quadlin/error.hpp"
#include "quadlin/json_io.hpp"

namespace py = pybind11;
using namespace quadlin;

namespace {

// JSON text in, JSON text out; the Python layer does the dict conversion.

Options options_of(long budget_ms, std::size_t closure_cap, std::size_t max_subgroup_gens) {
  Options o;
  o.budget_ms = budget_ms;
  o.closure_cap = closure_cap;
  o.max_subgroup_gens = max_subgroup_gens;
  return o;
}

Matrix gram_of(const GroupSpec& spec, const Options& o) {
  if (spec.gram) return *spec.gram;
  return invariant_form(*FiniteGroup::closure(spec.generators, o.closure_cap));
}

GroupSpec spec_of(const std::string& text) { return group_spec_from_json(parse_json_text(text)); }

std::string analyze_text(const std::string& group, long budget_ms, std::size_t closure_cap, std::size_t gens) {
  const Options o = options_of(budget_ms, closure_cap, gens);
  GroupSpec spec = spec_of(group);
  return certificate_json(analyze(spec.generators, gram_of(spec, o), o)).dump();
}

std::string verify_text(const std::string& group, const std::string& certificate, long budget_ms,
                        std::size_t closure_cap) {
  const Options o = options_of(budget_ms, closure_cap, 3);
  GroupSpec spec = spec_of(group);
  Json problems = verify_certificate(spec.generators, gram_of(spec, o), parse_json_text(certificate), o);
  return problems.dump();
}

std::string chartab_text(const std::string& group, std::size_t closure_cap) {
  GroupSpec spec = spec_of(group);
  return character_table_json(character_table(FiniteGroup::closure(spec.generators, closure_cap))).dump();
}

std::string witt_text(const std::string& group, std::size_t closure_cap) {
  GroupSpec spec = spec_of(group);
  GroupPtr g = FiniteGroup::closure(spec.generators, closure_cap);
  Matrix gram = spec.gram ? *spec.gram : invariant_form(*g);
  if (!is_invariant(gram, *g)) throw Error(Error::Kind::FormNotInvariant, "the form is not invariant");
  QuadraticSpace qs{g, gram};
  CharacterTable t = character_table(g);
  return witt_json(qs, t, witt_decompose(qs, t)).dump();
}

std::string scan_text(const std::string& group, long budget_ms, std::size_t gens) {
  return corollary_scan(spec_of(group).generators, options_of(budget_ms, kDefaultClosureCap, gens)).to_json().dump();
}

std::string entry_text(const std::string& name, const std::map<std::string, long>& params) {
  CatalogEntry e = build(name, params);
  GroupSpec spec{e.generators, std::nullopt, e.name};
  if (e.gram.rows()) spec.gram = e.gram;
  Json out = group_spec_to_json(spec);
  out["description"] = e.description;
  out["order"] = e.order;
  if (!e.expected.empty()) out["expected"] = e.expected;
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_quadlin, m) {
  m.doc() = "Exact linearizability certificates for finite groups acting on quadrics.";

  static py::exception<Error> error(m, "QuadlinError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object args = py::make_tuple(to_string(e.kind()), e.what());
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  const long budget = Options{}.budget_ms;
  m.def("analyze", &analyze_text, py::arg("group"), py::arg("budget_ms") = budget,
        py::arg("closure_cap") = kDefaultClosureCap, py::arg("max_subgroup_gens") = 3);
  m.def("verify", &verify_text, py::arg("group"), py::arg("certificate"), py::arg("budget_ms") = budget,
        py::arg("closure_cap") = kDefaultClosureCap);
  m.def("character_table", &chartab_text, py::arg("group"), py::arg("closure_cap") = kDefaultClosureCap);
  m.def("witt", &witt_text, py::arg("group"), py::arg("closure_cap") = kDefaultClosureCap);
  m.def("scan", &scan_text, py::arg("group"), py::arg("budget_ms") = budget, py::arg("max_subgroup_gens") = 3);
  m.def("catalog_names", &catalog_names);
  m.def("catalog_families", &catalog_families);
  m.def("catalog_entry", &entry_text, py::arg("name"), py::arg("params") = std::map<std::string, long>{});
  m.def("normalize", [](const std::string& s) { return to_string(parse_cyclo(s)); }, py::arg("scalar"),
        "Canonical form of a scalar in the E(n) grammar.");
}
