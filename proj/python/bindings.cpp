#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nilform/cli.hpp"
#include "nilform/errors.hpp"
#include "nilform/io.hpp"

namespace py = pybind11;
using namespace nilform;
using io::Json;

namespace {

// JSON crosses the boundary as text; the Python side loads it.
std::string dumps(const Json& j) { return j.dump(); }
Json loads(const std::string& s) { return io::parse(s); }

std::optional<FieldElement> maybe_element(const std::optional<std::string>& s, const DatumPtr& d) {
  if (!s) return std::nullopt;
  return io::element_from_json(loads(*s), d);
}

}  // namespace

PYBIND11_MODULE(_nilform, m) {
  m.doc() = "exact constructions of Anosov automorphisms on rational nilpotent Lie algebras";

  static py::exception<Error> exc(m, "NilformError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, e.what());
    }
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });

  m.def("certify", [](const std::string& algebra, const std::string& matrix) {
    return dumps(io::to_json(certify(io::algebra_from_json(loads(algebra)), io::matrix_from_json(loads(matrix)))));
  });
  m.def("algebra_type", [](const std::string& algebra) {
    return lower_central_series(io::algebra_from_json(loads(algebra))).type;
  });
  m.def("check_jacobi", [](const std::string& algebra) { return check_jacobi(io::algebra_from_json(loads(algebra))); });
  m.def("check_type_constraints", [](const std::vector<int>& type) { return to_string(check_type_constraints(type)); });
  m.def("is_integer_like", [](const std::string& matrix) { return is_integer_like(io::matrix_from_json(loads(matrix))); });

  m.def("pfaffian", [](const std::string& matrix) { return pfaffian(io::matrix_from_json(loads(matrix))).str(); });
  m.def("pfaffian_form", [](const std::string& algebra) { return pfaffian_form(io::algebra_from_json(loads(algebra))).str(); });
  m.def("classify_type42", [](const std::string& algebra) {
    const Type42Class c = classify_type42(io::algebra_from_json(loads(algebra)));
    return dumps({{"k", c.squarefree.get_str()},
                  {"discriminant", io::to_json(c.discriminant)},
                  {"form", io::to_json(c.form)},
                  {"anosov_compatible", c.anosov_compatible}});
  });
  m.def("scheuneman_dual", [](const std::string& algebra) {
    return dumps(io::to_json(scheuneman_dual(io::algebra_from_json(loads(algebra)))));
  });
  m.def("n_k_algebra", [](long k) { return dumps(io::to_json(n_k_algebra(k))); });
  m.def("h_k_algebra", [](long k) { return dumps(io::to_json(h_k_algebra(k))); });
  m.def("solve_pell", [](long d) {
    const PellSolution s = solve_pell(Integer(d));
    return py::make_tuple(py::int_(py::str(s.x.get_str())), py::int_(py::str(s.y.get_str())));
  });

  m.def("verify_field", [](const std::string& field) { return dumps(io::to_json(resolve_field(field)->spec())); });
  m.def(
      "search_units",
      [](const std::string& field, int height, int powers, bool cone) {
        const DatumPtr d = resolve_field(field);
        Json out = Json::array();
        for (const auto& x : search_units(d, height, powers, cone ? pisot_cone(d) : std::vector<ConeConstraint>{}))
          out.push_back(io::to_json(x));
        return dumps(out);
      },
      py::arg("field"), py::arg("height"), py::arg("powers") = 1, py::arg("pisot_cone") = false);
  m.def("is_unit_pisot", [](const std::string& field, const std::string& element) {
    const DatumPtr d = resolve_field(field);
    return is_unit_pisot(io::element_from_json(loads(element), d));
  });

  m.def("recipe_z4_example", [] { return dumps(io::to_json(recipe_z4_example())); });
  m.def(
      "recipe_count",
      [](long k, long l, std::optional<std::string> lambda) {
        return dumps(io::to_json(recipe_count(k, l, maybe_element(lambda, biquadratic_datum(k, l)))));
      },
      py::arg("k"), py::arg("l"), py::arg("lam") = std::nullopt);
  m.def(
      "recipe_laur",
      [](const std::string& algebra, const std::vector<std::size_t>& grading, const std::string& field,
         const std::string& lambda) {
        const DatumPtr d = resolve_field(field);
        return dumps(io::to_json(
            recipe_laur(io::algebra_from_json(loads(algebra)), Grading{grading}, d, io::element_from_json(loads(lambda), d))));
      },
      py::arg("algebra"), py::arg("grading"), py::arg("field"), py::arg("lam"));
  m.def(
      "recipe_csig",
      [](const std::string& field, std::optional<std::string> lambda, int c) {
        const DatumPtr d = resolve_field(field);
        return dumps(io::to_json(recipe_csig(d, maybe_element(lambda, d), c)));
      },
      py::arg("field"), py::arg("lam") = std::nullopt, py::arg("c") = 2);
  m.def(
      "recipe_last",
      [](const std::string& field, std::optional<std::string> lambda, int c) {
        const DatumPtr d = resolve_field(field);
        return dumps(io::to_json(recipe_last(d, maybe_element(lambda, d), c)));
      },
      py::arg("field"), py::arg("lam") = std::nullopt, py::arg("c") = 2);
}
