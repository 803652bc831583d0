#include <algorithm>
#include <optional>

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tfpme/classical.hpp"
#include "tfpme/errors.hpp"
#include "tfpme/kernel.hpp"
#include "tfpme/mass_match.hpp"
#include "tfpme/order.hpp"
#include "tfpme/profile.hpp"
#include "tfpme/reconstruct.hpp"
#include "tfpme/specfun.hpp"

namespace py = pybind11;
using namespace tfpme;

namespace {

py::array_t<double> to_numpy(std::span<const double> values) {
  py::array_t<double> out(static_cast<py::ssize_t>(values.size()));
  std::copy(values.begin(), values.end(), out.mutable_data());
  return out;
}

py::array_t<double> nodes(const Grid& grid) {
  py::array_t<double> out(static_cast<py::ssize_t>(grid.n_steps() + 1));
  auto* data = out.mutable_data();
  for (std::size_t n = 0; n <= grid.n_steps(); ++n) data[n] = grid.node(n);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Self-similar solutions of the time-fractional porous medium equation";
  mod.attr("__version__") = TFPME_VERSION;
  py::register_exception<NumericalError>(mod, "NumericalError", PyExc_RuntimeError);

  auto sf = mod.def_submodule("specfun");
  sf.def("ln_gamma", &specfun::ln_gamma);
  sf.def("gamma", &specfun::gamma);
  sf.def("beta", &specfun::beta);
  sf.def("incomplete_beta_lower", &specfun::incomplete_beta_lower, py::arg("x"), py::arg("a"), py::arg("b"));
  sf.def("incomplete_beta_upper", &specfun::incomplete_beta_upper, py::arg("x"), py::arg("a"), py::arg("b"));

  py::class_<FractionalParams>(mod, "FractionalParams")
      .def(py::init<double, double>(), py::arg("alpha"), py::arg("m"))
      .def_property_readonly("alpha", &FractionalParams::alpha)
      .def_property_readonly("m", &FractionalParams::m)
      .def_property_readonly("A", &FractionalParams::A)
      .def_property_readonly("B", &FractionalParams::B)
      .def("__repr__", [](const FractionalParams& p) {
        return "FractionalParams(alpha=" + std::to_string(p.alpha()) + ", m=" + std::to_string(p.m()) + ")";
      });

  mod.def("kernel_exact", &kernel_exact, py::arg("params"), py::arg("z"), py::arg("tau"));
  mod.def("kernel_quadrature", &kernel_quadrature, py::arg("params"), py::arg("z"), py::arg("tau"),
          py::arg("tol") = 1e-12);

  py::class_<Profile>(mod, "Profile")
      .def_property_readonly("params", &Profile::params)
      .def_property_readonly("z0", [](const Profile& u) { return u.grid().z0(); })
      .def_property_readonly("n_steps", [](const Profile& u) { return u.grid().n_steps(); })
      .def_property_readonly("z", [](const Profile& u) { return nodes(u.grid()); })
      .def_property_readonly("values", [](const Profile& u) { return to_numpy(u.values()); })
      .def("value_at", &Profile::value_at)
      .def("__len__", &Profile::size);

  mod.def("solve_profile", py::overload_cast<const FractionalParams&, double, std::size_t>(&solve_profile),
          py::arg("params"), py::arg("z0"), py::arg("n_steps") = 1024, py::call_guard<py::gil_scoped_release>());
  mod.def("seed_value", &seed_value, py::arg("params"), py::arg("z0"), py::arg("h"));
  mod.def("profile_upper_bound", &profile_upper_bound);
  mod.def("discrete_half_mass", &discrete_half_mass);

  py::class_<MassMatchResult>(mod, "MassMatchResult")
      .def_readonly("z0_star", &MassMatchResult::z0_star)
      .def_readonly("profile", &MassMatchResult::profile)
      .def_readonly("residual", &MassMatchResult::residual)
      .def_readonly("iterations", &MassMatchResult::iterations)
      .def_readonly("bracket_history", &MassMatchResult::bracket_history)
      .def_readonly("monotone", &MassMatchResult::monotone);

  mod.def(
      "find_support",
      [](const FractionalParams& p, std::size_t n_steps, double tol, double z0_init) {
        SupportSearch search;
        search.tol = tol;
        search.z0_init = z0_init;
        return find_support(p, n_steps, search);
      },
      py::arg("params"), py::arg("n_steps") = 1024, py::arg("tol") = 1e-4, py::arg("z0_init") = 1.0,
      py::call_guard<py::gil_scoped_release>());

  py::class_<OrderReport>(mod, "OrderReport")
      .def_readonly("z0", &OrderReport::z0)
      .def_readonly("base_n", &OrderReport::base_n)
      .def_readonly("diff_coarse", &OrderReport::diff_coarse)
      .def_readonly("diff_fine", &OrderReport::diff_fine)
      .def_readonly("p_estimate", &OrderReport::p_estimate)
      .def_readonly("p_interior", &OrderReport::p_interior);

  mod.def(
      "estimate_order",
      [](const FractionalParams& p, std::size_t base_n, std::optional<double> z0) {
        return z0 ? estimate_order(p, *z0, base_n) : estimate_order(p, base_n);
      },
      py::arg("params"), py::arg("base_n") = 2048, py::arg("z0") = py::none(),
      py::call_guard<py::gil_scoped_release>());

  py::class_<SpaceTimeSolution>(mod, "SpaceTimeSolution")
      .def(py::init<Profile>())
      .def_property_readonly("similarity_exponent", &SpaceTimeSolution::similarity_exponent)
      .def("front", &SpaceTimeSolution::front)
      .def("evaluate_u", py::vectorize(&SpaceTimeSolution::evaluate_u), py::arg("x"), py::arg("t"))
      .def("total_mass", &SpaceTimeSolution::total_mass);
  mod.def("origin_one_sided_slope", &origin_one_sided_slope);

  mod.def("classical_constant", &classical_constant);
  mod.def("classical_support", &classical_support);
  mod.def("classical_profile", py::vectorize(&classical_profile), py::arg("m"), py::arg("z"));
}
