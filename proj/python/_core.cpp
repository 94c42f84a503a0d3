#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "pw/engines.hpp"
#include "pw/errors.hpp"
#include "pw/networks.hpp"
#include "pw/scenario.hpp"
#include "pw/verify.hpp"

namespace py = pybind11;
using namespace pw;

namespace {

using RealArray = py::array_t<double, py::array::c_style | py::array::forcecast>;
using ComplexArray = py::array_t<Complex>;

ComplexArray eval_pulse(const TemporalPulse& p, const RealArray& t) {
  auto in = t.unchecked<1>();
  ComplexArray out(in.shape(0));
  auto o = out.mutable_unchecked<1>();
  for (py::ssize_t i = 0; i < in.shape(0); ++i) o(i) = p(in(i));
  return out;
}

ComplexArray eval_rational(const Rational& r, const RealArray& omega) {
  auto in = omega.unchecked<1>();
  ComplexArray out(in.shape(0));
  auto o = out.mutable_unchecked<1>();
  for (py::ssize_t i = 0; i < in.shape(0); ++i) o(i) = r(in(i));
  return out;
}

// (len(t), len(omega), 2, 2)
ComplexArray eval_spectrum(const SpectrumFunction& s, const RealArray& t, const RealArray& omega) {
  auto tt = t.unchecked<1>();
  auto ww = omega.unchecked<1>();
  ComplexArray out({tt.shape(0), ww.shape(0), py::ssize_t{2}, py::ssize_t{2}});
  auto o = out.mutable_unchecked<4>();
  for (py::ssize_t i = 0; i < tt.shape(0); ++i)
    for (py::ssize_t j = 0; j < ww.shape(0); ++j) {
      const Matrix2c v = s(tt(i), ww(j));
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) o(i, j, a, b) = v(a, b);
    }
  return out;
}

UniformGrid as_grid(const RealArray& x, const char* name) {
  auto v = x.unchecked<1>();
  const auto n = static_cast<std::size_t>(v.shape(0));
  if (n < 2) throw DomainError(std::string(name) + " needs at least two points");
  const UniformGrid g = UniformGrid::linspace(v(0), v(n - 1), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(v(i) - g[i]) > 1e-9 * std::max(1.0, g.max_abs())) {
      throw DomainError(std::string(name) + " must be uniformly spaced");
    }
  }
  return g;
}

ComplexArray grid_to_array(const WignerSpectrumGrid& g) {
  ComplexArray out({static_cast<py::ssize_t>(g.t_grid.size()), static_cast<py::ssize_t>(g.omega_grid.size()),
                    py::ssize_t{2}, py::ssize_t{2}});
  auto o = out.mutable_unchecked<4>();
  for (std::size_t i = 0; i < g.t_grid.size(); ++i)
    for (std::size_t j = 0; j < g.omega_grid.size(); ++j)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) o(i, j, a, b) = g.at(i, j)(a, b);
  return out;
}

ComplexArray network_pulse(const Rational& multiplier, double beta, const RealArray& t) {
  const UniformGrid g = as_grid(t, "t");
  return eval_pulse(network_output_pulse(multiplier, to_frequency(make_exp_pulse(beta)), g), t);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Single-photon pulses and Wigner spectra of cavities, DPAs and passive networks.";

  py::register_exception<StabilityError>(m, "StabilityError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("exp_pulse", [](double rate, const RealArray& t) { return eval_pulse(make_exp_pulse(rate), t); },
        py::arg("rate"), py::arg("t"), "sqrt(2 rate) exp(-rate t) sampled at t.");

  m.def(
      "cavity_output_pulse",
      [](double kappa, double omega0, double gamma, const RealArray& t) {
        return eval_pulse(cavity_output_pulse({kappa, omega0}, make_exp_pulse(gamma)), t);
      },
      py::arg("kappa"), py::arg("omega0"), py::arg("gamma"), py::arg("t"));
  m.def(
      "dpa_output_pulses",
      [](double kappa, double epsilon, double gamma, const RealArray& t) {
        const PulsePair p = dpa_output_pulses({kappa, epsilon}, gamma);
        return py::make_tuple(eval_pulse(p.minus, t), eval_pulse(p.plus, t));
      },
      py::arg("kappa"), py::arg("epsilon"), py::arg("gamma"), py::arg("t"), "(xi_minus, xi_plus) sampled at t.");

  m.def(
      "input_spectrum",
      [](double gamma, const RealArray& t, const RealArray& omega) {
        return eval_spectrum(wigner_closed_form(single_photon_covariance(make_exp_pulse(gamma))), t, omega);
      },
      py::arg("gamma"), py::arg("t"), py::arg("omega"), "Closed-form input spectrum, shape (len(t), len(omega), 2, 2).");
  m.def(
      "cavity_spectrum",
      [](double kappa, double omega0, double gamma, const RealArray& t, const RealArray& omega) {
        return eval_spectrum(cavity_output_wigner({kappa, omega0}, gamma), t, omega);
      },
      py::arg("kappa"), py::arg("omega0"), py::arg("gamma"), py::arg("t"), py::arg("omega"));
  m.def(
      "dpa_spectrum",
      [](double kappa, double epsilon, double gamma, const RealArray& t, const RealArray& omega) {
        return eval_spectrum(dpa_output_wigner({kappa, epsilon}, gamma), t, omega);
      },
      py::arg("kappa"), py::arg("epsilon"), py::arg("gamma"), py::arg("t"), py::arg("omega"));
  m.def(
      "cavity_spectrum_numeric",
      [](double kappa, double omega0, double gamma, const RealArray& t, const RealArray& omega) {
        return grid_to_array(
            wigner_numeric(cavity_output_covariance({kappa, omega0}, gamma), as_grid(t, "t"), as_grid(omega, "omega")));
      },
      py::arg("kappa"), py::arg("omega0"), py::arg("gamma"), py::arg("t"), py::arg("omega"),
      "Quadrature oracle; t and omega must be uniform.");
  m.def(
      "dpa_spectrum_numeric",
      [](double kappa, double epsilon, double gamma, const RealArray& t, const RealArray& omega) {
        return grid_to_array(
            wigner_numeric(dpa_output_covariance({kappa, epsilon}, gamma), as_grid(t, "t"), as_grid(omega, "omega")));
      },
      py::arg("kappa"), py::arg("epsilon"), py::arg("gamma"), py::arg("t"), py::arg("omega"));

  m.def(
      "cavity_transfer",
      [](double kappa, double omega0, const RealArray& omega) { return eval_rational(cavity_transfer({kappa, omega0}), omega); },
      py::arg("kappa"), py::arg("omega0"), py::arg("omega"));
  m.def(
      "direct_coupling_transfer",
      [](double kappa, double omega1, double omega2, Complex alpha, const RealArray& omega) {
        return eval_rational(direct_coupling_transfer({{kappa, omega1}, omega2, alpha}), omega);
      },
      py::arg("kappa"), py::arg("omega1"), py::arg("omega2"), py::arg("alpha"), py::arg("omega"));
  m.def(
      "feedback_transfer",
      [](double kappa, double omega1, double reflectivity, double phase, const RealArray& omega) {
        return eval_rational(feedback_transfer({kappa, omega1}, BeamSplitter(reflectivity, phase)), omega);
      },
      py::arg("kappa"), py::arg("omega1"), py::arg("reflectivity"), py::arg("phase") = 0.0, py::arg("omega"));
  m.def(
      "effective_decay_rate",
      [](double kappa, double reflectivity) { return effective_decay_rate(kappa, BeamSplitter(reflectivity)); },
      py::arg("kappa"), py::arg("reflectivity"));
  m.def(
      "stability_check", [](double kappa, double epsilon) { return stability_check(DpaModel{kappa, epsilon}); },
      py::arg("kappa"), py::arg("epsilon"));

  m.def(
      "open_loop_pulse",
      [](double kappa, double omega1, double beta, const RealArray& t) {
        return network_pulse(cavity_transfer({kappa, omega1}), beta, t);
      },
      py::arg("kappa"), py::arg("omega1"), py::arg("beta"), py::arg("t"), "Numeric inverse transform; t must be uniform.");
  m.def(
      "direct_coupling_pulse",
      [](double kappa, double omega1, double omega2, Complex alpha, double beta, const RealArray& t) {
        return network_pulse(direct_coupling_transfer({{kappa, omega1}, omega2, alpha}), beta, t);
      },
      py::arg("kappa"), py::arg("omega1"), py::arg("omega2"), py::arg("alpha"), py::arg("beta"), py::arg("t"));
  m.def(
      "feedback_pulse",
      [](double kappa, double omega1, double reflectivity, double phase, double beta, const RealArray& t) {
        return network_pulse(feedback_transfer({kappa, omega1}, BeamSplitter(reflectivity, phase)), beta, t);
      },
      py::arg("kappa"), py::arg("omega1"), py::arg("reflectivity"), py::arg("phase"), py::arg("beta"), py::arg("t"));

  m.def("list_scenarios", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& s : scenario_presets()) out.emplace_back(s.name, s.description);
    return out;
  });
  m.def(
      "run_scenario",
      [](const std::string& scenario, const std::filesystem::path& out, const std::vector<std::string>& overrides) {
        Scenario s = load_scenario(scenario);
        for (const auto& o : overrides) apply_override(s, o);
        const RunSummary r = run_scenario(s, out);
        py::dict d;
        d["files"] = r.files;
        d["metrics"] = r.metrics;
        return d;
      },
      py::arg("scenario"), py::arg("out"), py::arg("overrides") = std::vector<std::string>{});
  m.def(
      "verify",
      [](const std::string& suite) {
        const VerifyReport report = pw::verify(parse_suite(suite));
        py::list checks;
        for (const auto& c : report.checks) {
          py::dict d;
          d["suite"] = c.suite;
          d["name"] = c.name;
          d["measured"] = c.measured;
          d["tolerance"] = c.tolerance;
          d["passed"] = c.passed;
          checks.append(d);
        }
        return checks;
      },
      py::arg("suite") = "all");
}
