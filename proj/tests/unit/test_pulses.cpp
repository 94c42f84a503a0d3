#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "oracle/oracle.hpp"
#include "pw/errors.hpp"
#include "pw/pulses.hpp"

using namespace pw;

TEST(ExpPulse, Values) {
  const auto nu = make_exp_pulse(2.0);
  EXPECT_NEAR(std::abs(nu(0.0) - 2.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(nu(0.5) - 2.0 * std::exp(-1.0)), 0.0, 1e-15);
  EXPECT_EQ(nu(-0.1), Complex(0.0, 0.0));
  EXPECT_NEAR(norm(nu), 1.0, 1e-14);
}

TEST(ExpPulse, RejectsNonPositiveRate) {
  EXPECT_THROW(make_exp_pulse(0.0), DomainError);
  EXPECT_THROW(make_exp_pulse(-1.0), DomainError);
  EXPECT_THROW(TemporalPulse({ExpTerm{1.0, {-0.5, 0.0}, 0}}), DomainError);
}

TEST(InnerProduct, ClosedForm) {
  const auto a = make_exp_pulse(2.0);
  const auto b = make_exp_pulse(3.0);
  EXPECT_NEAR(std::abs(inner_product(a, b) - 2.0 * std::sqrt(6.0) / 5.0), 0.0, 1e-14);
}

TEST(InnerProduct, SampledAgreesWithClosedForm) {
  const auto grid = UniformGrid::linspace(0.0, 20.0, 40001);
  const auto a = TemporalPulse::from_samples(make_exp_pulse(2.0).sample(grid));
  const auto b = make_exp_pulse(3.0);
  EXPECT_NEAR(std::abs(inner_product(a, b) - 2.0 * std::sqrt(6.0) / 5.0), 0.0, 1e-6);
}

TEST(Transform, ExpTermRational) {
  TemporalPulse p({ExpTerm{{1.5, -0.5}, {2.0, 3.0}, 1}});
  const auto s = to_frequency(p);
  for (double w : {-7.0, 0.0, 0.3, 11.0}) {
    const Complex expect = Complex(1.5, -0.5) / std::pow(kI * w + Complex(2.0, 3.0), 2);
    EXPECT_NEAR(std::abs(s(w) - expect), 0.0, 1e-14);
  }
}

TEST(Transform, RoundTripAnalytic) {
  const auto nu = make_exp_pulse(2.0);
  const auto grid = UniformGrid::linspace(0.0, 6.0, 601);
  const auto back = to_time(to_frequency(nu), grid);
  ASSERT_TRUE(back.samples().has_value());
  ASSERT_TRUE(back.samples()->truncation.has_value());
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.count; ++i) worst = std::max(worst, std::abs(back(grid[i]) - nu(grid[i])));
  // t = 0 included: the inverse returns the right-hand limit.
  EXPECT_LT(worst, 1e-6);
}

TEST(Transform, InverseMatchesResidues) {
  // Two-pole spectrum with an oscillating component.
  const std::vector<Complex> poles{{1.0, 1.5}, {-2.0, 0.7}};
  Rational r(Polynomial::linear(1.0, 0.5), Polynomial::from_roots(poles, 1.0));
  SpectralPulse s({r});
  const auto grid = UniformGrid::linspace(0.0, 10.0, 201);
  const auto x = to_time(s, grid);
  for (std::size_t i = 1; i < grid.count; ++i)
    EXPECT_LT(std::abs(x(grid[i]) - oracle::residue_inverse(r, grid[i])), 1e-6) << grid[i];
}

TEST(Transform, SampledRoundTrip) {
  const auto grid = UniformGrid::linspace(0.0, 15.0, 3001);
  const auto nu = TemporalPulse::from_samples(make_exp_pulse(1.0).sample(grid));
  const auto spectrum = to_frequency(nu);
  EXPECT_FALSE(spectrum.is_analytic());
  const auto back = to_time(spectrum, grid);
  for (std::size_t i = 0; i < grid.count; i += 100)
    EXPECT_LT(std::abs(back(grid[i]) - nu(grid[i])), 1e-9);
}

TEST(Transform, SampledSpectrumApproximatesRational) {
  const auto grid = UniformGrid::linspace(0.0, 30.0, 30001);
  const auto nu = TemporalPulse::from_samples(make_exp_pulse(1.0).sample(grid));
  const auto spectrum = to_frequency(nu);
  const auto exact = to_frequency(make_exp_pulse(1.0));
  for (double w : {-3.0, 0.0, 0.5, 2.0}) EXPECT_LT(std::abs(spectrum(w) - exact(w)), 1e-3);
}

TEST(Parseval, SpectralInnerProduct) {
  const auto a = make_exp_pulse(2.0);
  const auto b = make_exp_pulse(3.0);
  const Complex freq = spectral_inner_product(to_frequency(a), to_frequency(b));
  EXPECT_NEAR(std::abs(freq - inner_product(a, b)), 0.0, 1e-8);
}

TEST(Export, PulseCsv) {
  const auto grid = UniformGrid::linspace(0.0, 1.0, 3);
  std::ostringstream out;
  write_pulse_csv(out, make_exp_pulse(2.0).sample(grid));
  const std::string text = out.str();
  EXPECT_EQ(text.substr(0, 9), "t,re,im\n0");
  EXPECT_NE(text.find("2.000000000000e+00"), std::string::npos);
  EXPECT_EQ(text.find('\r'), std::string::npos);
}

TEST(Grid, LinspaceEndpoints) {
  const auto g = UniformGrid::linspace(-25.0, 25.0, 201);
  EXPECT_EQ(g[0], -25.0);
  EXPECT_EQ(g[200], 25.0);
  EXPECT_EQ(g[100], 0.0);
  EXPECT_THROW(UniformGrid::linspace(1.0, 1.0, 3), DomainError);
}

TEST(Convolve, MatchesQuadrature) {
  const ExpTerm a{{1.0, 0.5}, {2.0, 1.0}, 0};
  for (const ExpTerm b : {ExpTerm{{-0.7, 0.0}, {0.5, -3.0}, 1}, ExpTerm{{2.0, 0.0}, {2.0, 1.0}, 0},
                          ExpTerm{{1.0, 0.0}, {2.0, 1.0}, 2}}) {
    const TemporalPulse conv(convolve(a, b));
    for (double t : {0.0, 0.3, 1.7, 4.0}) {
      const Complex q = oracle::integrate([&](double s) { return a(s) * b(t - s); }, 0.0, t, 1e-13);
      EXPECT_NEAR(std::abs(conv(t) - q), 0.0, 1e-11) << t;
    }
  }
}
