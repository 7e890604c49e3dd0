#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.h"
#include "torsionk/fixtures.h"
#include "torsionk/invariants.h"
#include "torsionk/io.h"
#include "torsionk/smith.h"

namespace py = pybind11;
using namespace torsionk;

namespace {

// cpp_int has no pybind11 caster; go through decimal strings
py::int_ to_py(const Integer& a) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(a.str().c_str(), nullptr, 10))); }

py::list to_py(const std::vector<Integer>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_py(x));
  return out;
}

py::list to_py(const IntMatrix& m) {
  py::list rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.append(to_py(m.row(r)));
  return rows;
}

Integer from_py(const py::handle& h) { return Integer(py::str(h).cast<std::string>()); }

IntMatrix matrix_from_py(const py::sequence& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : py::len(rows[0]);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    const py::sequence row = rows[i];
    if (py::len(row) != c) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = from_py(row[j]);
  }
  return m;
}

py::dict group_dict(const FinAbGroup& g) {
  py::dict d;
  d["invariant_factors"] = to_py(g.invariant_factors());
  d["order"] = to_py(g.order());
  d["name"] = g.to_string();
  return d;
}

py::dict class_dict(const CohomologyClass& c) {
  py::dict d;
  d["degree"] = c.degree;
  d["modulus"] = to_py(c.modulus);
  d["group"] = group_dict(c.group);
  d["coordinates"] = to_py(c.coordinates);
  d["representative"] = to_py(c.representative.coords());
  d["zero"] = c.is_zero();
  return d;
}

}  // namespace

PYBIND11_MODULE(_torsionk, m) {
  m.doc() = "Exact tools for linear constraint systems over Z/d";
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<IncompatibleInput>(m, "IncompatibleInput", PyExc_ValueError);
  py::register_exception<UnverifiedSolution>(m, "UnverifiedSolution", PyExc_ValueError);

  m.def(
      "smith_normal_form",
      [](const py::sequence& rows) {
        const SmithDecomposition s = smith_normal_form(matrix_from_py(rows));
        py::dict d;
        d["u"] = to_py(s.u);
        d["s"] = to_py(s.s);
        d["v"] = to_py(s.v);
        d["diagonal"] = to_py(s.diagonal());
        d["rank"] = s.rank;
        return d;
      },
      py::arg("matrix"), "A = U S V with S diagonal, s_0 | s_1 | ..., U and V unimodular.");

  m.def(
      "solve_mod",
      [](const py::sequence& a, const py::sequence& b, const py::handle& d) -> py::object {
        std::vector<Integer> rhs;
        for (const auto& x : b) rhs.push_back(from_py(x));
        const auto x = solve_mod(matrix_from_py(a), rhs, from_py(d));
        if (!x) return py::none();
        return to_py(x->coords());
      },
      py::arg("a"), py::arg("b"), py::arg("d"));

  py::class_<LinearConstraintSystem>(m, "LinearConstraintSystem")
      .def_static("from_json", [](const std::string& s) { return lcs_from_json(parse_json(s)); })
      .def("to_json", [](const LinearConstraintSystem& l) { return dump_canonical(to_json(l)); })
      .def_property_readonly("modulus", [](const LinearConstraintSystem& l) { return to_py(l.modulus()); })
      .def_property_readonly("variables", &LinearConstraintSystem::variables)
      .def_property_readonly("num_constraints", &LinearConstraintSystem::num_constraints)
      .def("scalar_solution",
           [](const LinearConstraintSystem& l) -> py::object {
             const auto x = scalar_solution(l);
             if (!x) return py::none();
             return to_py(x->coords());
           })
      .def(
          "classical_value",
          [](const LinearConstraintSystem& l, std::int64_t limit) {
            const ClassicalValue v = classical_value(l, limit);
            py::dict d;
            d["satisfied"] = v.satisfied;
            d["constraints"] = v.constraints;
            d["value"] = v.to_string();
            d["maximizer"] = to_py(v.maximizer.coords());
            return d;
          },
          py::arg("limit") = 10'000'000)
      .def("canonical_realization",
           [](const LinearConstraintSystem& l) { return canonical_realization(hypergraph_of(l).hypergraph, l.modulus()); });

  py::class_<CW2Complex>(m, "CW2Complex")
      .def_static("from_json", [](const std::string& s) { return complex_from_json(parse_json(s)); })
      .def("to_json", [](const CW2Complex& x) { return dump_canonical(to_json(x)); })
      .def("euler_characteristic", &CW2Complex::euler_characteristic)
      .def("cell_count", &CW2Complex::count, py::arg("dim"));

  py::class_<OperatorSolution>(m, "OperatorSolution")
      .def_static("from_json", [](const std::string& s) { return solution_from_json(parse_json(s)); })
      .def("to_json", [](const OperatorSolution& t) { return dump_canonical(to_json(t)); })
      .def_property_readonly("dimension", &OperatorSolution::dimension)
      .def("stabilize", [](const OperatorSolution& t, std::size_t extra) { return stabilize(t, extra); },
           py::arg("extra"));

  m.def(
      "cohomology", [](const CW2Complex& x, const py::handle& k, int degree) { return group_dict(cohomology(x, from_py(k), degree)); },
      py::arg("complex"), py::arg("k"), py::arg("degree"));

  m.def(
      "verify",
      [](const LinearConstraintSystem& l, const OperatorSolution& t) {
        const VerificationReport r = verify_solution(l, t);
        py::dict d;
        d["pass"] = r.pass();
        d["torsion_pass"] = r.torsion_pass();
        d["commutation_pass"] = r.commutation_pass();
        d["constraints_pass"] = r.constraints_pass();
        d["failing_constraints"] = r.failing_constraints();
        return d;
      },
      py::arg("lcs"), py::arg("solution"));

  m.def(
      "det_cochain", [](const OperatorSolution& t, const LinearConstraintSystem& l) { return to_py(det_cochain(t, l).coords()); },
      py::arg("solution"), py::arg("lcs"));

  m.def(
      "class_of_solution",
      [](const CW2Complex& x, const LinearConstraintSystem& l, const OperatorSolution& t, const py::handle& mm) {
        const CdmClass c = class_of_solution(x, l, t, from_py(mm));
        py::dict d;
        d["notation"] = c.notation();
        d["g"] = to_py(c.g);
        d["h1"] = class_dict(c.h1);
        d["h2"] = class_dict(c.h2);
        d["h2_zero"] = c.h2.is_zero();
        return d;
      },
      py::arg("complex"), py::arg("lcs"), py::arg("solution"), py::arg("m"));

  m.def(
      "homotopy_group",
      [](const std::string& spectrum, long long r, const py::object& d, const py::object& mm) {
        auto need = [&](const py::object& v, const char* name) {
          if (v.is_none()) throw std::invalid_argument(std::string(name) + " is required for " + spectrum);
          return from_py(v);
        };
        SpectrumId s;
        if (spectrum == "kmud") {
          s = SpectrumId::kmud(need(d, "d"));
        } else if (spectrum == "cdm") {
          s = SpectrumId::cdm(need(d, "d"), need(mm, "m"));
        } else if (spectrum == "kosym") {
          s = SpectrumId::kosym();
        } else if (spectrum == "creal") {
          s = SpectrumId::creal(need(mm, "m"));
        } else {
          throw std::invalid_argument("unknown spectrum '" + spectrum + "'");
        }
        const HomotopyGroupResult h = homotopy_group(s, r);
        py::dict out;
        out["spectrum"] = s.to_string();
        out["exact"] = h.exact;
        out["order"] = to_py(h.order);
        if (h.exact) {
          out["group"] = group_dict(h.group);
        } else {
          py::list candidates;
          for (const auto& c : h.candidates) candidates.append(group_dict(c));
          out["candidates"] = candidates;
          out["subquotient_factors"] = to_py(h.subquotient_factors);
        }
        return out;
      },
      py::arg("spectrum"), py::arg("r"), py::arg("d") = py::none(), py::arg("m") = py::none());

  m.def(
      "builtin",
      [](const std::string& name) {
        Fixture f = builtin_fixture(name);
        return py::make_tuple(f.lcs, f.torus, f.solution);
      },
      py::arg("name"), "(lcs, torus, solution) for a shipped Mermin-type fixture.");
  m.def("builtin_names", &builtin_fixture_names);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int status = cli::run(args, out, err);
        return py::make_tuple(status, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in-process: (exit status, stdout, stderr).");
}
