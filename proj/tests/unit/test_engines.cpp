#include <gtest/gtest.h>

#include <set>

#include "pw/engines.hpp"
#include "pw/errors.hpp"
#include "pw/networks.hpp"
#include "pw/oracles.hpp"
#include "pw/verify.hpp"

using namespace pw;

namespace {

const UniformGrid kT = UniformGrid::linspace(0.0, 4.0, 81);
const UniformGrid kW = UniformGrid::linspace(-25.0, 25.0, 81);

double sup_distance(const TemporalPulse& a, const TemporalPulse& b, const UniformGrid& g = kT) {
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) worst = std::max(worst, std::abs(a(g[i]) - b(g[i])));
  return worst;
}

double spectrum_distance(const SpectrumFunction& a, const SpectrumFunction& b) {
  return max_abs_deviation(grid_eval(a, kT, kW), grid_eval(b, kT, kW));
}

}  // namespace

TEST(CavityPulse, KappaThree) {
  const auto eta = cavity_output_pulse({3.0, 0.0}, make_exp_pulse(2.0));
  EXPECT_LT(sup_distance(eta, TemporalPulse({{14.0, 2.0, 0}, {-12.0, 1.5, 0}})), 1e-13);
}

TEST(CavityPulse, StartValueAndNorm) {
  for (const CavityModel m : {CavityModel{0.0, 0.0}, CavityModel{3.0, 0.0}, CavityModel{4.0, 10.0},
                              CavityModel{100.0, 0.0}, CavityModel{4.0, 0.0}}) {
    const auto eta = cavity_output_pulse(m, make_exp_pulse(2.0));
    EXPECT_NEAR(std::abs(eta(0.0) - 2.0), 0.0, 1e-12);
    EXPECT_NEAR(norm(eta), 1.0, 1e-12);
  }
}

TEST(CavityPulse, ZeroKappaIsIdentity) {
  const auto nu = make_exp_pulse(2.0);
  EXPECT_EQ(sup_distance(cavity_output_pulse({0.0, 3.0}, nu), nu), 0.0);
}

TEST(CavityPulse, ConfluentMatchesFrequencyOracle) {
  const CavityModel m{4.0, 0.0};
  const auto nu = make_exp_pulse(2.0);
  const auto eta = cavity_output_pulse(m, nu);
  bool has_power = false;
  for (const auto& t : eta.terms()) has_power |= t.power == 1;
  EXPECT_TRUE(has_power);
  EXPECT_LT(sup_distance(eta, cavity_pulse_oracle(m, nu, kT)), 1e-6);
}

TEST(CavityPulse, NearConfluentIsContinuous) {
  const auto nu = make_exp_pulse(2.0);
  EXPECT_LT(sup_distance(cavity_output_pulse({4.0 + 1e-6, 0.0}, nu), cavity_output_pulse({4.0, 0.0}, nu)), 1e-5);
}

TEST(CavityPulse, SampledInputUsesFrequencyRoute) {
  const auto grid = UniformGrid::linspace(0.0, 20.0, 20001);
  const auto sampled = TemporalPulse::from_samples(make_exp_pulse(2.0).sample(grid));
  const auto eta = cavity_output_pulse({3.0, 1.0}, sampled);
  EXPECT_FALSE(eta.is_analytic());
  EXPECT_LT(sup_distance(eta, cavity_output_pulse({3.0, 1.0}, make_exp_pulse(2.0)), UniformGrid::linspace(0.1, 4.0, 40)),
            1e-3);
}

TEST(CavityPulse, LargeKappaApproachesNegatedInput) {
  const auto nu = make_exp_pulse(2.0);
  double previous = 1e9;
  for (double kappa : {10.0, 100.0, 1000.0, 10000.0}) {
    const double d = l2_distance(cavity_output_pulse({kappa, 0.0}, nu), nu.scaled(-1.0));
    EXPECT_LT(d, previous);
    previous = d;
  }
  EXPECT_LT(previous, 0.05);
}

TEST(CavitySpectrum, PrintedFormEqualsTermRules) {
  for (const CavityModel m : {CavityModel{3.0, 0.0}, CavityModel{4.0, 10.0}, CavityModel{100.0, 0.0},
                              CavityModel{4.0, 50.0}, CavityModel{1.0, -2.0}}) {
    const auto rules = wigner_closed_form(cavity_output_covariance(m, 2.0));
    EXPECT_LT(spectrum_distance(cavity_output_wigner(m, 2.0), rules), 1e-12) << m.kappa << " " << m.omega0;
  }
}

TEST(CavitySpectrum, ZeroKappaEqualsInputExactly) {
  const auto in = grid_eval(wigner_closed_form(single_photon_covariance(make_exp_pulse(2.0))), kT, kW);
  const auto out = grid_eval(cavity_output_wigner({0.0, 0.0}, 2.0), kT, kW);
  EXPECT_EQ(max_abs_deviation(in, out), 0.0);
}

TEST(CavitySpectrum, FlippedCoefficientIsDetected) {
  for (const auto c : {PrintedCoefficient::cavity_s11_omega_kappa, PrintedCoefficient::cavity_s22_den_last_omega0}) {
    EXPECT_GT(cavity_spectrum_deviation({4.0, 10.0}, 2.0, kT, kW, c), 1e-3);
  }
}

TEST(DpaPulses, StartValues) {
  const auto p = dpa_output_pulses({4.0, 1.0}, 2.0);
  EXPECT_NEAR(std::abs(p.minus(0.0) - 2.0), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(p.plus(0.0)), 0.0, 1e-13);
}

TEST(DpaPulses, MatchConvolutionOracle) {
  EXPECT_LT(dpa_pulse_deviation({4.0, 1.0}, 2.0, kT), 1e-6);
  EXPECT_LT(dpa_pulse_deviation({1.5, 1.0}, 2.0, kT), 1e-6);
}

TEST(DpaPulses, ConfluentRates) {
  // (kappa + eps)/2 = gamma
  EXPECT_LT(dpa_pulse_deviation({3.0, 1.0}, 2.0, kT), 1e-6);
  EXPECT_LT(dpa_pulse_deviation({5.0, 1.0}, 2.0, kT), 1e-6);
}

TEST(DpaPulses, SmallEpsilonApproachesCavity) {
  const auto p = dpa_output_pulses({3.0, 1e-7}, 2.0);
  EXPECT_LT(sup_distance(p.minus, cavity_output_pulse({3.0, 0.0}, make_exp_pulse(2.0))), 1e-6);
  EXPECT_LT(sup_distance(p.plus, TemporalPulse()), 1e-6);
}

TEST(DpaPulses, Unstable) {
  EXPECT_THROW(dpa_output_pulses({1.0, 1.0}, 2.0), StabilityError);
  EXPECT_THROW(dpa_output_wigner({0.5, 1.0}, 2.0), StabilityError);
}

TEST(DpaGaussian, EqualTimeValues) {
  const auto chi = dpa_gaussian_part({4.0, 1.0});
  const Matrix2c v = chi.regular(0.7, 0.7);
  EXPECT_NEAR(v(0, 1).real(), 8.0 / 15.0, 1e-14);
  EXPECT_NEAR(v(1, 0).real(), 8.0 / 15.0, 1e-14);
  // branch limit kappa eps^2 / (2 (kappa^2 - eps^2))
  EXPECT_NEAR(v(0, 0).real(), 4.0 / 30.0, 1e-14);
  const double printed = (3.0 * 4.0 - 2.0 * 64.0) / (2.0 * 15.0);
  EXPECT_GT(std::abs(v(0, 0).real() - printed), 1.0);
}

TEST(DpaGaussian, MatchesVacuumQuadrature) {
  for (const DpaModel m : {DpaModel{1.5, 1.0}, DpaModel{4.0, 1.0}}) EXPECT_LT(dpa_chi_deviation(m), 1e-3);
}

TEST(DpaGaussian, VanishesWithEpsilon) {
  const auto chi = dpa_gaussian_part({4.0, 1e-9});
  EXPECT_LT(chi.regular(0.3, 0.1).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(DpaSpectrum, PrintedFormEqualsTermRules) {
  for (const DpaModel m : {DpaModel{1.5, 1.0}, DpaModel{4.0, 1.0}, DpaModel{100.0, 1.0}, DpaModel{7.0, 2.5}}) {
    const auto rules = wigner_closed_form(dpa_output_covariance(m, 2.0));
    EXPECT_LT(spectrum_distance(dpa_output_wigner(m, 2.0), rules), 1e-11) << m.kappa;
  }
}

TEST(DpaSpectrum, AppendixIdentities) {
  const auto s = dpa_output_wigner({4.0, 1.0}, 2.0);
  for (double t : {0.0, 0.4, 2.2})
    for (double w : {-9.0, 0.0, 1.5}) {
      const Matrix2c v = s(t, w);
      EXPECT_LT(std::abs(v(1, 0) - v(0, 1)), 1e-12);
      EXPECT_LT(std::abs(v(1, 1) - v(0, 0) + kInvSqrt2Pi * std::exp(Complex(0.0, -w * t))), 1e-12);
    }
}

TEST(DpaSpectrum, SmallEpsilonApproachesCavity) {
  const auto dpa = dpa_output_wigner({3.0, 1e-7}, 2.0);
  const auto cav = cavity_output_wigner({3.0, 0.0}, 2.0);
  const double d = max_abs_deviation(grid_eval(dpa, kT, kW), grid_eval(cav, kT, kW), std::pair{0, 0});
  EXPECT_LT(d, 1e-6);
}

TEST(Network, OutputWignerMatchesReducedCavity) {
  const BeamSplitter bs(0.5);
  const CavityModel m{4.0, 0.0};
  const auto s = network_output_wigner(feedback_transfer(m, bs), to_frequency(make_exp_pulse(2.0)), kT);
  const auto reduced = cavity_output_wigner({effective_decay_rate(4.0, bs), 0.0}, 2.0);
  EXPECT_LT(spectrum_distance(s, reduced), 1e-6);
}

TEST(Network, DetectionProbability) {
  const auto p = detection_probability(make_exp_pulse(2.0), UniformGrid::linspace(0.0, 1.0, 3));
  EXPECT_NEAR(p[0], 4.0, 1e-14);
  EXPECT_NEAR(p[2], 4.0 * std::exp(-4.0), 1e-14);
}

TEST(Coefficients, NamesAreUniqueAndParse) {
  std::set<std::string> seen;
  for (const auto c : printed_coefficients()) {
    const std::string name(coefficient_name(c));
    EXPECT_TRUE(seen.insert(name).second) << name;
    EXPECT_EQ(parse_coefficient(name), c);
  }
  EXPECT_EQ(seen.size(), 65u);
  EXPECT_THROW(parse_coefficient("no_such"), DomainError);
}
