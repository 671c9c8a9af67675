#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "brauer_workbench/brauer.hpp"
#include "brauer_workbench/cli.hpp"
#include "brauer_workbench/errors.hpp"
#include "brauer_workbench/field_descriptor.hpp"
#include "brauer_workbench/json_io.hpp"
#include "brauer_workbench/lattice.hpp"

namespace py = pybind11;
using namespace bw;

namespace {

// Reports cross the boundary as JSON text; the Python layer decodes them.
std::string dump(const json_io::Json& j) { return j.dump(); }

gf::FiniteField finite_field(const std::string& text) {
  const auto desc = parse_field_descriptor(text);
  const auto* f = std::get_if<FiniteFieldDesc>(&desc);
  if (!f) throw InvalidArgument("expected a finite field, got '" + text + "'");
  return gf::FiniteField::make(f->p, f->n);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of brauer_workbench";

  static py::exception<BudgetExhausted> budget(m, "BudgetExhausted", PyExc_RuntimeError);
  static py::exception<ConstructionError> construction(m, "ConstructionError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidArgument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const BudgetExhausted& e) {
      py::set_error(budget, e.what());
    } catch (const ConstructionError& e) {
      py::set_error(construction, e.what());
    }
  });

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command-line entry point in process; returns (exit_code, stdout, stderr).");

  m.def(
      "hilbert_symbol",
      [](const std::string& a, const std::string& b, const std::string& place) {
        return num::hilbert_symbol(num::BigRational::parse(a), num::BigRational::parse(b), num::Place::parse(place));
      },
      py::arg("a"), py::arg("b"), py::arg("place"));

  m.def(
      "classify_rational",
      [](const std::string& a, const std::string& b, std::int64_t max_height) {
        const quat::RationalAlgebra A(num::BigRational::parse(a), num::BigRational::parse(b));
        return dump(json_io::to_json(quat::classify(A, quat::RationalClassifyOptions{max_height})));
      },
      py::arg("a"), py::arg("b"), py::arg("max_height") = 10000);

  m.def(
      "classify_finite",
      [](std::uint64_t q, gf::Value a, gf::Value b) {
        const auto F = gf::FiniteField::of_order(q);
        return dump(json_io::to_json(quat::classify(quat::FiniteAlgebra(F.element(a), F.element(b)))));
      },
      py::arg("q"), py::arg("a"), py::arg("b"));

  m.def(
      "relative_brauer",
      [](const std::string& L, const std::string& K) {
        return dump(json_io::to_json(brauer::relative_brauer_cyclic(finite_field(L), finite_field(K))));
      },
      py::arg("L"), py::arg("K"));

  m.def(
      "factor_degrees",
      [](std::uint64_t q, std::uint64_t p, const std::vector<gf::Value>& coeffs) {
        const procyclic::ProcyclicField K(q, p);
        return procyclic::factor_degrees_over_K(gf::Poly(K.base_field(), coeffs), K);
      },
      py::arg("q"), py::arg("p"), py::arg("coeffs"));

  m.def(
      "build_tower",
      [](const std::string& kind, std::uint64_t q, std::uint64_t p, unsigned depth, unsigned max_ambient_bits) {
        lattice::TowerOptions o;
        o.max_ambient_bits = max_ambient_bits;
        if (kind == "artin-schreier") return dump(json_io::to_json(lattice::build_artin_schreier_tower(p, depth, o)));
        if (kind == "kummer") return dump(json_io::to_json(lattice::build_kummer_tower(q, p, depth, o)));
        if (kind == "t7") return dump(json_io::to_json(lattice::build_t7_tower(q, depth, o)));
        throw InvalidArgument("unknown tower kind '" + kind + "'");
      },
      py::arg("kind"), py::arg("q") = 0, py::arg("p") = 0, py::arg("depth") = 1,
      py::arg("max_ambient_bits") = gf::kDefaultMaxBits);

  m.def(
      "subgroup_count",
      [](std::vector<std::vector<std::size_t>> table) {
        return grouplat::subgroups(grouplat::FiniteGroup::from_table("G", std::move(table))).subgroups.size();
      },
      py::arg("table"));

  m.def(
      "is_m_group",
      [](std::vector<std::vector<std::size_t>> table) {
        return grouplat::is_m_group(grouplat::FiniteGroup::from_table("G", std::move(table)));
      },
      py::arg("table"));

  m.def(
      "sqrt_formula_check",
      [](double c, double d) {
        const auto r = brauer::sqrt_formula_check(c, d);
        return py::make_tuple(r.alpha, r.residual);
      },
      py::arg("c"), py::arg("d"));
}
