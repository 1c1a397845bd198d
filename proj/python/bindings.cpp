#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "moserlab/cli_io.hpp"
#include "moserlab/cosmo.hpp"
#include "moserlab/errors.hpp"
#include "moserlab/rs_core.hpp"
#include "moserlab/stationary.hpp"
#include "moserlab/verify.hpp"
#include "moserlab/zero_sums.hpp"
#include "moserlab/zeros.hpp"

namespace py = pybind11;
using namespace moserlab;

namespace {

std::vector<double> to_vector(std::span<const double> s) { return {s.begin(), s.end()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "moserlab native core";
  m.attr("__version__") = std::string(version());

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<PoleError>(m, "PoleError", base.ptr());
  auto parse = py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<MonotonicityError>(m, "MonotonicityError", parse.ptr());
  py::register_exception<IncompleteTable>(m, "IncompleteTable", base.ptr());
  py::register_exception<CoincidenceError>(m, "CoincidenceError", base.ptr());
  py::register_exception<NumericFault>(m, "NumericFault", base.ptr());
  py::register_exception<NoIntervalError>(m, "NoIntervalError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());
  py::register_exception<InvalidBracket>(m, "InvalidBracket", base.ptr());

  m.def("theta", [](double t) { return theta(t).value; }, py::arg("t"));
  m.def("theta_derivatives", [](double t) {
    const auto d = theta_derivatives(t);
    return py::make_tuple(d.first, d.second);
  }, py::arg("t"));
  m.def("z", [](double t) {
    const auto r = z(t);
    return py::make_tuple(r.value, r.abs_err);
  }, py::arg("t"), "(Z(t), abs_err)");
  m.def("z_derivatives", [](double t) {
    const auto d = z_derivatives(t);
    return py::make_tuple(d.value, d.first, d.second);
  }, py::arg("t"), "(Z, Z', Z'')");
  m.def("zeta_half", [](double t) { return zeta_half(t).value; }, py::arg("t"));
  m.def("zeta_second_ratio", [](double t) { return zeta_second_ratio(t).value; }, py::arg("t"));
  m.def("gram_point", &gram_point, py::arg("n"));

  py::class_<ZeroTable>(m, "ZeroTable")
      .def_property_readonly("ordinates", [](const ZeroTable& t) { return to_vector(t.ordinates()); })
      .def_property_readonly("range", [](const ZeroTable& t) {
        return py::make_tuple(t.range().lo, t.range().hi);
      })
      .def_property_readonly("ingested", [](const ZeroTable& t) {
        return t.source() == ZeroSource::ingested;
      })
      .def_property_readonly("refine_tol", &ZeroTable::refine_tol)
      .def("covers_origin", &ZeroTable::covers_origin)
      .def("count_up_to", &ZeroTable::count_up_to, py::arg("x"))
      .def("__len__", &ZeroTable::size)
      .def("__getitem__", [](const ZeroTable& t, std::size_t i) {
        if (i >= t.size()) throw py::index_error();
        return t[i];
      });

  m.def("scan_zeros", [](double lo, double hi, double tol) { return scan_zeros(lo, hi, {}, tol); },
        py::arg("t_lo"), py::arg("t_hi"), py::arg("refine_tol") = 1e-9,
        py::call_guard<py::gil_scoped_release>());
  m.def("ingest_zeros", [](const std::string& text) { return ingest_zeros(text); }, py::arg("text"));
  m.def("completeness_check", [](const ZeroTable& t, double T) {
    const auto r = completeness_check(t, T);
    return py::dict(py::arg("T") = r.T, py::arg("observed") = r.observed,
                    py::arg("smooth") = r.smooth, py::arg("deviation") = r.deviation,
                    py::arg("flagged") = r.flagged);
  }, py::arg("table"), py::arg("T"));

  py::class_<SpectralSum>(m, "SpectralSum")
      .def_property_readonly("kernel", [](const SpectralSum& s) { return std::string(kernel_name(s.kernel)); })
      .def_readonly("t", &SpectralSum::t)
      .def_readonly("partial", &SpectralSum::partial)
      .def_readonly("tail", &SpectralSum::tail)
      .def_readonly("total", &SpectralSum::total)
      .def_readonly("T_trunc", &SpectralSum::T_trunc)
      .def_readonly("tail_err", &SpectralSum::tail_err);
  m.def("spectral_sum", [](const std::string& k, double t, const ZeroTable& table, double T) {
    return spectral_sum(parse_kernel(k), t, table, T);
  }, py::arg("kernel"), py::arg("t"), py::arg("table"), py::arg("T_trunc"));
  m.def("partial_sum", [](const std::string& k, double t, const std::vector<double>& g) {
    return partial_sum(parse_kernel(k), t, g);
  }, py::arg("kernel"), py::arg("t"), py::arg("ordinates"));
  m.def("riemann_constant", &riemann_constant);

  py::class_<StationaryPoint>(m, "StationaryPoint")
      .def(py::init([](double t0, double lo, double hi, double z, double z2) {
        return make_stationary_point(t0, lo, hi, z, z2);
      }), py::arg("t0"), py::arg("gamma_lo"), py::arg("gamma_hi"), py::arg("z_value"), py::arg("z2_value"))
      .def_readonly("t0", &StationaryPoint::t0)
      .def_readonly("gamma_lo", &StationaryPoint::gamma_lo)
      .def_readonly("gamma_hi", &StationaryPoint::gamma_hi)
      .def_readonly("z_value", &StationaryPoint::z_value)
      .def_readonly("z2_value", &StationaryPoint::z2_value)
      .def_readonly("delta", &StationaryPoint::delta);
  m.def("scan_stationary", [](const ZeroTable& t, double lo, double hi) {
    return scan_stationary(t, lo, hi).points;
  }, py::arg("table"), py::arg("t_lo"), py::arg("t_hi"), py::call_guard<py::gil_scoped_release>());
  m.def("filter_tilde", &filter_tilde, py::arg("points"), py::arg("alpha"));
  m.def("theorem1_margin", &theorem1_margin, py::arg("point"), py::arg("alpha"));

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("name", &VerificationReport::name)
      .def_readonly("samples", &VerificationReport::samples)
      .def_readonly("passed", &VerificationReport::pass)
      .def_readonly("statistics", &VerificationReport::statistics)
      .def_readonly("notes", &VerificationReport::notes);
  m.def("verify_formula1", [](const ZeroTable& t, double lo, double hi, std::size_t n, std::uint64_t seed) {
    return verify_formula1(t, lo, hi, n, seed);
  }, py::arg("table"), py::arg("t_lo"), py::arg("t_hi"), py::arg("n_samples"), py::arg("seed") = 0,
     py::call_guard<py::gil_scoped_release>());
  m.def("verify_formula1_surrogate", [](std::vector<double> roots, double lo, double hi,
                                        std::size_t n, std::uint64_t seed) {
    return verify_formula1_surrogate(std::move(roots), lo, hi, n, seed);
  }, py::arg("roots"), py::arg("t_lo"), py::arg("t_hi"), py::arg("n_samples"), py::arg("seed") = 0);
  m.def("verify_eq34_consistency", [](double t, const ZeroTable& table) {
    return verify_eq34_consistency(t, table);
  }, py::arg("t"), py::arg("table"));
  m.def("verify_corollaries", [](const ZeroTable& t, double lo, double hi) {
    return verify_corollaries(t, lo, hi);
  }, py::arg("table"), py::arg("t_lo"), py::arg("t_hi"), py::call_guard<py::gil_scoped_release>());
  m.def("verify_eq9", [](const std::vector<StationaryPoint>& p, const ZeroTable& t) {
    return verify_eq9(p, t);
  }, py::arg("points"), py::arg("table"));
  m.def("verify_asymptotics_ab", [](const std::vector<StationaryPoint>& p, const ZeroTable& t) {
    return verify_asymptotics_ab(p, t);
  }, py::arg("points"), py::arg("table"));
  m.def("verify_theorem1", &verify_theorem1, py::arg("points"), py::arg("alpha"));

  py::class_<CosmoParams>(m, "CosmoParams")
      .def(py::init([](double kappa, double c) { return CosmoParams{kappa, c, 1}; }),
           py::arg("kappa") = 1.0, py::arg("c") = 1.0)
      .def_readonly("kappa", &CosmoParams::kappa)
      .def_readonly("c", &CosmoParams::c)
      .def_readonly("k", &CosmoParams::k);
  py::class_<CosmoSample>(m, "CosmoSample")
      .def_readonly("t", &CosmoSample::t)
      .def_readonly("R", &CosmoSample::R)
      .def_readonly("dR", &CosmoSample::dR)
      .def_readonly("ddR", &CosmoSample::ddR)
      .def_readonly("rho", &CosmoSample::rho)
      .def_readonly("p", &CosmoSample::p)
      .def_readonly("w", &CosmoSample::w)
      .def_readonly("model_err", &CosmoSample::model_err);
  py::class_<PressureInterval>(m, "PressureInterval")
      .def_readonly("t0", &PressureInterval::t0)
      .def_readonly("delta", &PressureInterval::delta)
      .def_readonly("lo", &PressureInterval::lo)
      .def_readonly("hi", &PressureInterval::hi);
  m.def("density", [](double t, const CosmoParams& p) { return density(t, p); },
        py::arg("t"), py::arg("params") = CosmoParams{});
  m.def("pressure", [](double t, const CosmoParams& p, const ZeroTable& table) {
    return pressure(t, p, table);
  }, py::arg("t"), py::arg("params"), py::arg("table"));
  m.def("pressure_direct", [](double t, const CosmoParams& p) { return pressure_direct(t, p); },
        py::arg("t"), py::arg("params") = CosmoParams{});
  m.def("eos_ratio", [](double t, const CosmoParams& p, const ZeroTable& table) {
    return eos_ratio(t, p, table);
  }, py::arg("t"), py::arg("params"), py::arg("table"));
  m.def("pressure_interval", [](const StationaryPoint& sp, const CosmoParams& p, const ZeroTable& t) {
    return pressure_interval(sp, p, t);
  }, py::arg("point"), py::arg("params"), py::arg("table"));
  m.def("profile", [](double lo, double hi, double step, const CosmoParams& p, const ZeroTable& t) {
    return profile(lo, hi, step, p, t);
  }, py::arg("t_lo"), py::arg("t_hi"), py::arg("step"), py::arg("params"), py::arg("table"),
     py::call_guard<py::gil_scoped_release>());

  m.def("run", [](std::vector<std::string> args) {
    args.insert(args.begin(), "moserlab");
    return run(args);
  }, py::arg("args"), "Run a CLI subcommand; returns the exit code.");
}
