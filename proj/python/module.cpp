#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sdym/backlund.hpp"
#include "sdym/charge.hpp"
#include "sdym/errors.hpp"
#include "sdym/seed_io.hpp"
#include "sdym/verification.hpp"

namespace py = pybind11;
using namespace sdym;

namespace {

RealSlicePoint point(const std::pair<cplx, cplx>& p) { return {p.first, p.second}; }

const SDYMSolution& full_gauge(const SeedSolution& s) {
  const auto* sol = std::get_if<SDYMSolution>(&s);
  if (!sol) throw Error(ErrorCode::UnsupportedSeed, "needs a full_gauge seed");
  return *sol;
}

py::tuple args_tuple(const GaussArguments& g) { return py::make_tuple(g.x_plus, g.middle, g.x_minus); }

// A seed file together with the solution it builds.
struct Seed {
  SeedFile file;
  SeedSolution solution;

  explicit Seed(SeedFile f) : file(std::move(f)), solution(build_from_file(file)) {}
};

}  // namespace

PYBIND11_MODULE(_sdym, m) {
  m.doc() = "Self-dual Yang-Mills seeds, Backlund transformations and instanton charge";

  py::register_exception<Error>(m, "Error");

  py::class_<Seed>(m, "Seed")
      .def_static("from_json", [](const std::string& text) { return Seed(parse_seed(text)); })
      .def_static("load", [](const std::string& path) { return Seed(load_seed(path)); })
      .def_static("one_instanton", [](cplx a) { return Seed(SeedFile{one_instanton_seed(a), {}}); }, py::arg("a"))
      .def("to_json", [](const Seed& s) { return seed_to_json(s.file); })
      .def_property_readonly("full_gauge", [](const Seed& s) { return s.file.seed.kind == SeedKind::FullGauge; });

  py::class_<ResidualEntry>(m, "ResidualEntry")
      .def_readonly("identity", &ResidualEntry::identity)
      .def_readonly("max_residual", &ResidualEntry::max_residual)
      .def_property_readonly("at", [](const ResidualEntry& e) { return std::make_pair(e.at.y, e.at.z); })
      .def_readonly("tol", &ResidualEntry::tol)
      .def_readonly("passed", &ResidualEntry::pass)
      .def_readonly("skipped", &ResidualEntry::skipped)
      .def_readonly("note", &ResidualEntry::note);

  py::class_<ResidualReport>(m, "ResidualReport")
      .def_readonly("entries", &ResidualReport::entries)
      .def_property_readonly("passed", &ResidualReport::pass)
      .def("__getitem__", &ResidualReport::find, py::return_value_policy::reference_internal);

  m.def("identity_catalogue", &identity_catalogue);

  m.def(
      "verify",
      [](const Seed& s, int samples, std::uint64_t rng_seed, double exact_tol, double quadrature_tol,
         std::pair<cplx, cplx> base, int quad_order) {
        VerificationConfig c;
        c.samples = samples;
        c.rng_seed = rng_seed;
        c.exact_tol = exact_tol;
        c.quadrature_tol = quadrature_tol;
        c.transform.base = point(base);
        c.transform.quadrature_order = quad_order;
        py::gil_scoped_release release;
        return verify(s.solution, c);
      },
      py::arg("seed"), py::arg("samples") = 100, py::arg("rng_seed") = 0, py::arg("exact_tol") = 1e-12,
      py::arg("quadrature_tol") = 1e-8, py::arg("base") = std::pair<cplx, cplx>{0.0, 0.0}, py::arg("quad_order") = 32);

  m.def(
      "transform",
      [](const Seed& s, std::pair<cplx, cplx> target, std::pair<cplx, cplx> base, int quad_order) {
        TransformConfig cfg;
        cfg.base = point(base);
        cfg.quadrature_order = quad_order;
        const SDYMSolution& sol = full_gauge(s.solution);
        const RealSlicePoint t = point(target);
        const TransformedSolution lr = backlund(sol, cfg);
        py::dict out;
        out["lr"] = args_tuple(lr.arguments(t));
        out["rl"] = args_tuple(transform_left(transform_right(sol, cfg)).arguments(t));
        out["hermiticity_residual"] = lr.hermiticity_residual(t);
        out["commutativity_residual"] = commutativity_residual(sol, t, cfg);
        return out;
      },
      py::arg("seed"), py::arg("target"), py::arg("base") = std::pair<cplx, cplx>{0.0, 0.0},
      py::arg("quad_order") = 32);

  m.def(
      "charge_density", [](const Seed& s, std::pair<cplx, cplx> p) { return charge_density(s.solution, point(p)); },
      py::arg("seed"), py::arg("point"));
  m.def(
      "backlund_charge_density",
      [](const Seed& s, std::pair<cplx, cplx> p) { return backlund_charge_density(s.solution, point(p)); },
      py::arg("seed"), py::arg("point"));

  m.def(
      "radial_profile",
      [](const Seed& s, double r_max, int n) {
        const RadialProfile p = radial_profile(s.solution, r_max, n);
        return py::make_tuple(p.radii, p.q_in, p.q_backlund);
      },
      py::arg("seed"), py::arg("r_max"), py::arg("n"));

  m.def(
      "total_charge",
      [](const Seed& s, const std::string& method) {
        if (method != "radial" && method != "grid") throw py::value_error("method must be radial or grid");
        const TotalCharge t = total_charge(s.solution, method == "grid" ? ChargeMethod::Grid : ChargeMethod::Radial);
        py::dict out;
        out["value"] = t.value;
        out["method"] = to_string(t.method);
        out["error_estimate"] = t.error_estimate;
        return out;
      },
      py::arg("seed"), py::arg("method") = "radial");
}
