#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "invsg/analysis.hpp"
#include "invsg/catalog.hpp"
#include "invsg/cli.hpp"
#include "invsg/green.hpp"
#include "invsg/io.hpp"
#include "invsg/words.hpp"

namespace py = pybind11;
using namespace invsg;

namespace {

InvolutorySemigroup load_table(const std::string& spec) {
  CatalogEntry entry = load_semigroup(spec);
  if (!entry.table) {
    throw Error(ErrorCode::LimitExceeded,
                spec + " has " + std::to_string(entry.size) + " elements and is not tabulated");
  }
  return std::move(*entry.table);
}

InvolutorySemigroup from_rows(const std::vector<std::vector<ElementId>>& rows,
                              std::vector<ElementId> star, std::string name) {
  std::vector<ElementId> table;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw Error(ErrorCode::MalformedTable, "table must be square");
    table.insert(table.end(), row.begin(), row.end());
  }
  return from_cayley(rows.size(), std::move(table), std::move(star), std::move(name));
}

std::string analyze_json(const std::string& spec, const std::optional<std::string>& reduct,
                         std::uint64_t budget, std::size_t max_iota, bool timings) {
  const CatalogEntry entry = load_semigroup(spec);
  AnalysisOptions options;
  options.budget = budget;
  options.max_iota_len = max_iota;
  const ReductStatus status = reduct ? parse_reduct_override(*reduct) : entry.reduct;
  return to_json(decide_infb(entry, status, options), timings).dump();
}

py::dict classify(const InvolutorySemigroup& s) {
  const TypeResult t = classify_type(s);
  py::dict d;
  d["kind"] = t.kind == TypeResult::Kind::A ? "A" : "B";
  if (t.kind == TypeResult::Kind::A) {
    d["witness"] = t.witness;
  } else {
    d["N"] = t.n;
  }
  return d;
}

py::dict satisfies_py(const InvolutorySemigroup& s, const std::string& identity,
                      std::uint64_t budget) {
  const SatisfactionResult r = satisfies(s, parse_identity(identity), budget);
  py::dict d;
  d["holds"] = r.holds;
  d["counterexample"] = r.counterexample ? py::cast(*r.counterexample) : py::none();
  d["substitutions"] = r.substitutions;
  return d;
}

py::dict greens_py(const InvolutorySemigroup& s) {
  const GreensData g = greens(s);
  py::dict d;
  d["R"] = g.r_class;
  d["L"] = g.l_class;
  d["H"] = g.h_class;
  d["D"] = g.d_class;
  d["J"] = g.j_class;
  return d;
}

py::tuple cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_invsg, m) {
  m.doc() = "Finite involutory semigroups: Green's relations, identities and INFB decisions";

  static py::exception<Error> error(m, "InvsgError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error.ptr())(std::string(to_string(e.code())), e.what());
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<InvolutorySemigroup>(m, "Semigroup")
      .def_property_readonly("name", &InvolutorySemigroup::name)
      .def_property_readonly("size", &InvolutorySemigroup::size)
      .def("__len__", &InvolutorySemigroup::size)
      .def("product", [](const InvolutorySemigroup& s, ElementId a, ElementId b) {
        if (a >= s.size() || b >= s.size()) throw py::index_error("element id out of range");
        return s.product(a, b);
      })
      .def("star", [](const InvolutorySemigroup& s, ElementId a) {
        if (a >= s.size()) throw py::index_error("element id out of range");
        return s.star(a);
      })
      .def("label", &InvolutorySemigroup::label)
      .def_property_readonly("star_map", &InvolutorySemigroup::star_map)
      .def("idempotents", [](const InvolutorySemigroup& s) { return idempotents(s); })
      .def("is_regular", [](const InvolutorySemigroup& s) { return is_regular(s); })
      .def("to_cayley_json", [](const InvolutorySemigroup& s) { return to_cayley_json(s); })
      .def("__repr__", [](const InvolutorySemigroup& s) {
        return "<Semigroup " + s.name() + " with " + std::to_string(s.size()) + " elements>";
      });

  m.def("load", &load_table, "Tabulated catalog semigroup for a spec string", py::arg("spec"));
  m.def("from_table", &from_rows, "Validated semigroup from a square table and a star map",
        py::arg("table"), py::arg("star"), py::arg("name") = "user");
  m.def("parse_cayley_json", &parse_cayley_json, py::arg("text"));
  m.def("analyze_json", &analyze_json, "Decision report as a JSON string", py::arg("spec"), py::arg("reduct") = py::none(),
        py::arg("budget") = kDefaultBudget, py::arg("max_iota") = 8, py::arg("timings") = true);
  m.def("classify", &classify, "Type A with an idempotent witness, or type B with N",
        py::arg("semigroup"));
  m.def("satisfies", &satisfies_py, py::arg("semigroup"), py::arg("identity"),
        py::arg("budget") = kDefaultBudget);
  m.def("tsl_divides", [](const InvolutorySemigroup& s) { return tsl_membership(s).member; });
  m.def("greens", &greens_py, py::arg("semigroup"));
  m.def("cli", &cli, "Run the command line tool; returns (exit code, stdout, stderr)", py::arg("args"));
}
