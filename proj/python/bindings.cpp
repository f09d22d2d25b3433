#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vandal/bounds.hpp"
#include "vandal/errors.hpp"
#include "vandal/localizer.hpp"
#include "vandal/serialize.hpp"
#include "vandal/torus_nodes.hpp"
#include "vandal/vandermonde.hpp"

namespace py = pybind11;
using namespace vandal;

namespace {

using Points = std::vector<std::vector<double>>;

py::object to_python(const Json& value) {
  return py::module_::import("json").attr("loads")(dump_json(value, -1));
}

PsiParams make_params(int d, int r, double b, double h) {
  PsiParams p;
  p.dim = d;
  p.r = r;
  p.b = b;
  p.h = h;
  p.validate();
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multivariate Vandermonde spectra and separation bounds";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<InvalidInput>(m, "InvalidInput", error.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", error.ptr());
  py::register_exception<FeasibilityError>(m, "FeasibilityError", error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<ComputationError>(m, "ComputationError", error.ptr());

  m.def("gen_equispaced", [](std::size_t mm, std::size_t d) { return gen_equispaced(mm, d).points(); },
        py::arg("m"), py::arg("d"));
  m.def("gen_random_separated",
        [](std::size_t mm, std::size_t d, double q, std::uint64_t seed) {
          return gen_random_separated(mm, d, q, seed).points();
        },
        py::arg("m"), py::arg("d"), py::arg("q"), py::arg("seed") = 1);
  m.def("gen_quasi_grid",
        [](std::size_t n, std::size_t d, std::uint64_t seed) { return gen_quasi_grid(n, d, seed).points(); },
        py::arg("n"), py::arg("d"), py::arg("seed") = 1);
  m.def("separation", [](const Points& pts) { return separation(NodeSet::from_points(pts)); },
        py::arg("nodes"));
  m.def("wrap_distance",
        [](const std::vector<double>& a, const std::vector<double>& b) { return wrap_distance(a, b); });

  m.def("spectrum",
        [](const Points& pts, std::uint64_t n, const std::string& path, bool cross_check,
           std::uint64_t explicit_cap) {
          SpectrumOptions opts;
          if (path == "explicit") {
            opts.path = SpectralPath::explicit_matrix;
          } else if (path != "gram") {
            throw InvalidInput("path must be 'gram' or 'explicit'");
          }
          opts.cross_check = cross_check;
          opts.explicit_cap = explicit_cap;
          return to_python(to_json(spectrum(VandermondeSpec(NodeSet::from_points(pts), n), opts)));
        },
        py::arg("nodes"), py::arg("n"), py::arg("path") = "gram", py::arg("cross_check") = false,
        py::arg("explicit_cap") = kDefaultExplicitCap);

  m.def("bounds",
        [](int n, double q, int d, int mm) {
          Json rows = Json::array();
          for (const auto& rep : all_bounds(n, q, d, mm)) rows.push_back(to_json(rep));
          return to_python(rows);
        },
        py::arg("n"), py::arg("q"), py::arg("d"), py::arg("m") = 2);
  m.def("sharpness_upper", &sharpness_upper, py::arg("n"), py::arg("q"), py::arg("d"));
  m.def("table2", [] {
    const auto t = table2();
    py::dict out;
    out["condition"] = t.condition;
    out["bound"] = t.bound;
    out["condition_exact"] = t.condition_exact;
    out["bound_exact"] = t.bound_exact;
    return out;
  });

  m.def("psi_eval",
        [](const std::vector<double>& x, int r, double b, double h) {
          return psi_eval(x, make_params(static_cast<int>(x.size()), r, b, h));
        },
        py::arg("x"), py::arg("r"), py::arg("b"), py::arg("h"));
  m.def("psi_hat",
        [](const std::vector<double>& v, int r, double b, double h) {
          return psi_hat(v, make_params(static_cast<int>(v.size()), r, b, h));
        },
        py::arg("v"), py::arg("r"), py::arg("b"), py::arg("h"));
  m.def("psi_at_zero", [](int d, int r, double b, double h) { return psi_at_zero(make_params(d, r, b, h)); },
        py::arg("d"), py::arg("r"), py::arg("b"), py::arg("h"));
  m.def("ratio_closed_form",
        [](int d, int r, double b, double h) { return ratio_closed_form(make_params(d, r, b, h)).value; },
        py::arg("d"), py::arg("r"), py::arg("b"), py::arg("h"));
  m.def("h_for_p_rule", &h_for_p_rule, py::arg("r"), py::arg("d"), py::arg("b"));
}
