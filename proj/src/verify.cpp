#include "pw/verify.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>

#include "pw/errors.hpp"
#include "pw/networks.hpp"
#include "pw/oracles.hpp"

namespace pw {

namespace {

constexpr double kGamma = 2.0;

struct Recorder {
  VerifyReport& report;
  std::string suite;

  void operator()(std::string name, double measured, double tolerance) {
    const bool ok = std::isfinite(measured) && measured <= tolerance;
    report.checks.push_back({suite, std::move(name), measured, tolerance, ok});
  }
};

std::string tag(const char* fmt, double a, double b) {
  char buf[96];
  std::snprintf(buf, sizeof buf, fmt, a, b);
  return buf;
}

double sup_distance(const TemporalPulse& a, const TemporalPulse& b, const UniformGrid& grid) {
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) worst = std::max(worst, std::abs(a(grid[i]) - b(grid[i])));
  return worst;
}

std::vector<double> random_omegas(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-50.0, 50.0);
  std::vector<double> out(n);
  for (double& w : out) w = dist(rng);
  return out;
}

double unit_modulus_error(const Rational& r, const std::vector<double>& omegas) {
  double worst = 0.0;
  for (double w : omegas) worst = std::max(worst, std::abs(std::abs(r(w)) - 1.0));
  return worst;
}

// Network setting of the pulse-shaping section: beta = 2, kappa = 1, omega1 = 1.
const CavityModel kNetworkCavity{1.0, 1.0};
constexpr double kBeta = 2.0;

UniformGrid network_grid() { return UniformGrid::linspace(0.0, 40.0, 16001); }

void pulses_suite(Recorder check) {
  const TemporalPulse nu = make_exp_pulse(kGamma);
  check("exp pulse norm is 1", std::abs(norm(nu) - 1.0), 1e-14);
  check("exp pulse value at t=0.5 is 2/e", std::abs(nu(0.5) - 2.0 * std::exp(-1.0)), 1e-15);
  check("spectral pair at w=0 is 1", std::abs(to_frequency(nu)(0.0) - 1.0), 1e-15);
  check("inner product <2e^{-2t}, sqrt6 e^{-3t}> = 2 sqrt6/5",
        std::abs(inner_product(TemporalPulse({{2.0, 2.0, 0}}), TemporalPulse({{std::sqrt(6.0), 3.0, 0}})) -
                 2.0 * std::sqrt(6.0) / 5.0),
        1e-14);

  const auto sample_grid = UniformGrid::linspace(0.0, 20.0, 20001);
  const SpectralPulse fft = to_frequency(TemporalPulse::from_samples(nu.sample(sample_grid)));
  const SpectralPulse exact = to_frequency(nu);
  double fft_dev = 0.0;
  for (double w = -50.0; w <= 50.0; w += 0.25) fft_dev = std::max(fft_dev, std::abs(fft(w) - exact(w)));
  check("sampled FFT vs rational transform", fft_dev, 1e-4);

  const auto grid = UniformGrid::linspace(0.0, 10.0, 1001);
  check("round trip to_time(to_frequency(nu))", sup_distance(to_time(exact, grid), nu, grid), 1e-6);

  const TemporalPulse other({{Complex(1.0, 0.5), Complex(3.0, 2.0), 0}});
  check("Parseval time vs frequency inner product",
        std::abs(inner_product(nu, other) - spectral_inner_product(exact, to_frequency(other))), 1e-6);

  const TemporalPulse eta1 =
      network_output_pulse(cavity_transfer(kNetworkCavity), to_frequency(make_exp_pulse(kBeta)), network_grid());
  check("cavity all-pass output norm", std::abs(norm(eta1) * norm(eta1) - 1.0), 1e-4);
}

void covariance_suite(Recorder check) {
  const auto t = UniformGrid::linspace(0.0, 3.0, 201);
  const auto w = UniformGrid::linspace(-20.0, 20.0, 201);
  const TwoTimeCovariance cov = single_photon_covariance(make_exp_pulse(kGamma));

  check("input covariance (1,1) at t=0.1, r=0.3 is 4e^{-0.8}",
        std::abs(cov.regular(0.1, 0.3)(0, 0) - 4.0 * std::exp(-0.8)), 1e-14);

  const auto closed = grid_eval(wigner_closed_form(cov), t, w);
  auto printed = [](double tt, double ww) {
    Matrix2c s = Matrix2c::Zero();
    const Complex reg = 2.0 * kGamma / (kGamma + kI * ww) * std::exp(-kGamma * tt);
    s(0, 0) = std::exp(Complex(0.0, -ww * tt)) + reg;
    s(1, 1) = reg;
    return Matrix2c(s * kInvSqrt2Pi);
  };
  check("input spectrum closed form equals printed expression",
        max_abs_deviation(closed, grid_eval(printed, t, w)) / peak_magnitude(closed), 1e-13);
  check("input spectrum closed form vs numeric oracle", input_spectrum_deviation(kGamma, t, w), 1e-4);

  double pair = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) {
      const Matrix2c& s = closed.at(i, j);
      pair = std::max(pair, std::abs(s(1, 1) - (s(0, 0) - kInvSqrt2Pi * std::exp(Complex(0.0, -w[j] * t[i])))));
    }
  check("input spectrum (2,2) = (1,1) minus delta part", pair, 1e-12);

  const auto kappa0 = grid_eval(cavity_output_wigner({0.0, 0.0}, kGamma), t, w);
  check("kappa=0 output spectrum equals input exactly", max_abs_deviation(kappa0, closed), 0.0);

  const TwoTimeCovariance stat(Matrix2c::Zero(), {}, {{0, 0, 0.7, 0.7, 1.3}});
  const auto one = UniformGrid::linspace(0.5, 0.5, 1);
  const auto zero = UniformGrid::linspace(0.0, 0.0, 1);
  const Complex rule = wigner_closed_form(stat)(0.5, 0.0)(0, 0);
  const Complex numeric = wigner_numeric(stat, one, zero).at(0, 0)(0, 0);
  check("stationary term at w=0 is 2c/a/sqrt(2pi)",
        std::max(std::abs(rule - kInvSqrt2Pi * 2.0 * 0.7 / 1.3), std::abs(numeric - rule)), 1e-9);
}

void engines_suite(Recorder check, PrintedCoefficient flip) {
  const UniformGrid t = default_t_grid();
  const UniformGrid w = default_omega_grid();
  const TemporalPulse nu = make_exp_pulse(kGamma);

  const TemporalPulse eta = cavity_output_pulse({3.0, 0.0}, nu);
  const TemporalPulse expected({{14.0, 2.0, 0}, {-12.0, 1.5, 0}});
  check("cavity pulse kappa=3 equals 14e^{-2t} - 12e^{-1.5t}", sup_distance(eta, expected, t), 1e-12);
  for (const CavityModel m : {CavityModel{3.0, 0.0}, CavityModel{4.0, 10.0}}) {
    check(tag("cavity pulse vs frequency-domain oracle (kappa=%g, omega0=%g)", m.kappa, m.omega0),
          sup_distance(cavity_output_pulse(m, nu), cavity_pulse_oracle(m, nu, t), t), 1e-6);
  }
  for (const CavityModel m : {CavityModel{3.0, 0.0}, CavityModel{4.0, 10.0}, CavityModel{100.0, 0.0}}) {
    check(tag("cavity printed spectrum vs numeric oracle (kappa=%g, omega0=%g)", m.kappa, m.omega0),
          cavity_spectrum_deviation(m, kGamma, t, w, flip), 1e-3);
  }

  for (const double kappa : {1.5, 4.0, 100.0}) {
    const DpaModel m{kappa, 1.0};
    check(tag("DPA pulses vs matrix-exponential oracle (kappa=%g, eps=%g)", kappa, 1.0),
          dpa_pulse_deviation(m, kGamma, t, flip), 1e-6);
    check(tag("DPA Gaussian part vs vacuum quadrature (kappa=%g, eps=%g)", kappa, 1.0),
          dpa_chi_deviation(m, flip), 1e-3);
    check(tag("DPA printed spectrum vs numeric oracle (kappa=%g, eps=%g)", kappa, 1.0),
          dpa_spectrum_deviation(m, kGamma, t, w, flip), 1e-3);
    const SpectrumFunction s = dpa_output_wigner(m, kGamma, flip);
    double identity = 0.0;
    for (std::size_t i = 0; i < t.size(); i += 4)
      for (std::size_t j = 0; j < w.size(); j += 4) {
        const Matrix2c v = s(t[i], w[j]);
        const Complex delta = kInvSqrt2Pi * std::exp(Complex(0.0, -w[j] * t[i]));
        identity = std::max({identity, std::abs(v(1, 0) - v(0, 1)), std::abs(v(1, 1) - (v(0, 0) - delta))});
      }
    check(tag("DPA S21 = S12 and S22 = S11 - delta (kappa=%g, eps=%g)", kappa, 1.0), identity, 1e-12);
  }

  const auto omegas = random_omegas(1000, 7);
  const DirectCoupling dc{kNetworkCavity, 1.0, {1.0, 0.0}};
  const BeamSplitter bs(0.5);
  check("|G1| = 1 on the real axis", unit_modulus_error(cavity_transfer(kNetworkCavity), omegas), 1e-12);
  check("|direct coupling multiplier| = 1", unit_modulus_error(direct_coupling_transfer(dc), omegas), 1e-12);
  check("|feedback multiplier| = 1", unit_modulus_error(feedback_transfer(kNetworkCavity, bs), omegas), 1e-12);

  const SpectralPulse xi = to_frequency(make_exp_pulse(kBeta));
  const UniformGrid ng = network_grid();
  const TemporalPulse eta1 = network_output_pulse(cavity_transfer(kNetworkCavity), xi, ng);
  const TemporalPulse eta2 = network_output_pulse(direct_coupling_transfer(dc), xi, ng);
  const TemporalPulse eta3 = network_output_pulse(feedback_transfer(kNetworkCavity, bs), xi, ng);
  for (const auto& [name, p] : {std::pair{"open loop", &eta1}, {"direct coupling", &eta2}, {"feedback", &eta3}}) {
    check(std::string("unit norm after inverse transform: ") + name, std::abs(norm(*p) * norm(*p) - 1.0), 1e-4);
  }
  double integral = 0.0;
  const auto density = detection_probability(eta3, ng);
  for (std::size_t i = 0; i < density.size(); ++i)
    integral += density[i] * ng.step() * ((i == 0 || i + 1 == density.size()) ? 0.5 : 1.0);
  check("detection probability integrates to 1", std::abs(integral - 1.0), 1e-4);

  const auto p2 = detection_probability(eta2, ng);
  const auto p3 = detection_probability(eta3, ng);
  const auto p0 = detection_probability(eta1, ng);
  double l1_direct = 0.0, l1_feedback = 0.0;
  for (std::size_t i = 0; i < p0.size(); ++i) {
    l1_direct += std::abs(p2[i] - p0[i]) * ng.step();
    l1_feedback += std::abs(p3[i] - p0[i]) * ng.step();
  }
  check("feedback changes detection probability more than direct coupling", l1_direct - l1_feedback, 0.0);

  const TemporalPulse direct0 =
      network_output_pulse(direct_coupling_transfer({kNetworkCavity, 1.0, {0.0, 0.0}}), xi, ng);
  const TemporalPulse feedback0 = network_output_pulse(feedback_transfer(kNetworkCavity, BeamSplitter(1e-20)), xi, ng);
  const auto p1 = detection_probability(eta1, ng);
  const auto pd = detection_probability(direct0, ng);
  const auto pf = detection_probability(feedback0, ng);
  double reduce = 0.0;
  for (std::size_t i = 0; i < p1.size(); ++i) reduce = std::max({reduce, std::abs(pd[i] - p1[i]), std::abs(pf[i] - p1[i])});
  check("alpha=0 and r->0 reproduce open-loop |eta|^2", reduce, 1e-8);

  const auto loop_omegas = random_omegas(100, 11);
  double slh = 0.0;
  for (const double r : {0.01, 0.5, 0.99}) {
    const BeamSplitter b(r);
    const Rational reduced = slh_transfer(feedback_slh_reduce(cavity_slh({4.0, 0.0}), b), 0.0);
    const Rational loop = feedback_transfer({4.0, 0.0}, b);
    for (double om : loop_omegas) slh = std::max(slh, std::abs(reduced(om) - loop(om)));
  }
  check("reduced SLH cavity equals beamsplitter loop multiplier", slh, 1e-10);
}

}  // namespace

Suite parse_suite(const std::string& name) {
  if (name == "pulses") return Suite::pulses;
  if (name == "covariance") return Suite::covariance;
  if (name == "engines") return Suite::engines;
  if (name == "all") return Suite::all;
  throw DomainError("unknown suite '" + name + "' (expected all|pulses|covariance|engines)");
}

PrintedCoefficient parse_coefficient(const std::string& name) {
  for (PrintedCoefficient c : printed_coefficients())
    if (coefficient_name(c) == name) return c;
  throw DomainError("unknown printed coefficient '" + name + "'");
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void VerifyReport::print(std::ostream& out) const {
  char buf[320];
  for (const CheckResult& c : checks) {
    std::snprintf(buf, sizeof buf, "[%s] %-10s %-66s measured=%.3e tol=%.1e\n", c.passed ? "PASS" : "FAIL",
                  c.suite.c_str(), c.name.c_str(), c.measured, c.tolerance);
    out << buf;
  }
  std::size_t failed = 0;
  for (const CheckResult& c : checks) failed += c.passed ? 0 : 1;
  out << checks.size() - failed << "/" << checks.size() << " checks passed\n";
}

VerifyReport verify(Suite suite, PrintedCoefficient flip) {
  VerifyReport report;
  if (suite == Suite::pulses || suite == Suite::all) pulses_suite({report, "pulses"});
  if (suite == Suite::covariance || suite == Suite::all) covariance_suite({report, "covariance"});
  if (suite == Suite::engines || suite == Suite::all) engines_suite({report, "engines"}, flip);
  return report;
}

double input_spectrum_deviation(double gamma, const UniformGrid& t, const UniformGrid& omega) {
  const TwoTimeCovariance cov = single_photon_covariance(make_exp_pulse(gamma));
  const auto closed = grid_eval(wigner_closed_form(cov), t, omega);
  return max_abs_deviation(closed, wigner_numeric(cov, t, omega)) / peak_magnitude(closed);
}

double cavity_spectrum_deviation(const CavityModel& m, double gamma, const UniformGrid& t,
                                 const UniformGrid& omega, PrintedCoefficient flip) {
  const auto closed = grid_eval(cavity_output_wigner(m, gamma, flip), t, omega);
  const auto numeric = wigner_numeric(cavity_output_covariance(m, gamma), t, omega);
  return max_abs_deviation(closed, numeric) / peak_magnitude(numeric);
}

double dpa_pulse_deviation(const DpaModel& m, double gamma, const UniformGrid& t, PrintedCoefficient flip) {
  const PulsePair p = dpa_output_pulses(m, gamma, flip);
  const auto oracle = dpa_pulse_oracle(m, make_exp_pulse(gamma), t);
  double worst = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    worst = std::max({worst, std::abs(p.minus(t[i]) - oracle[i](0)), std::abs(p.plus(t[i]) - oracle[i](1))});
  }
  return worst;
}

double dpa_chi_deviation(const DpaModel& m, PrintedCoefficient flip) {
  const TwoTimeCovariance chi = dpa_gaussian_part(m, flip);
  double worst = 0.0;
  for (const double t : {0.0, 0.15, 0.6, 1.7, 3.5})
    for (const double r : {0.0, 0.05, 0.4, 1.1, 2.9}) {
      if (t == r) continue;
      worst = std::max(worst, (chi.regular(t, r) - dpa_vacuum_oracle(m, t, r)).cwiseAbs().maxCoeff());
    }
  return worst;
}

double dpa_spectrum_deviation(const DpaModel& m, double gamma, const UniformGrid& t, const UniformGrid& omega,
                              PrintedCoefficient flip) {
  const auto closed = grid_eval(dpa_output_wigner(m, gamma, flip), t, omega);
  const auto numeric = wigner_numeric(dpa_output_covariance(m, gamma, flip), t, omega);
  return max_abs_deviation(closed, numeric) / peak_magnitude(numeric);
}

UniformGrid default_t_grid() { return UniformGrid::linspace(0.0, 4.0, 201); }
UniformGrid default_omega_grid() { return UniformGrid::linspace(-25.0, 25.0, 201); }

}  // namespace pw
