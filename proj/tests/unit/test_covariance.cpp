#include <gtest/gtest.h>

#include <sstream>

#include "oracle/oracle.hpp"
#include "pw/covariance.hpp"
#include "pw/errors.hpp"
#include "pw/states.hpp"

using namespace pw;

namespace {

// (1/sqrt(2 pi)) int R_reg(t, r) e^{-i w r} dr + delta part, by adaptive quadrature.
Matrix2c wigner_by_quadrature(const TwoTimeCovariance& cov, double t, double w) {
  Matrix2c out = cov.delta_coeff() * std::exp(Complex(0.0, -w * t));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      auto f = [&](double r) { return cov.regular(t, r)(i, j) * std::exp(Complex(0.0, -w * r)); };
      out(i, j) += oracle::integrate(f, -40.0, std::min(0.0, t), 1e-13) +
                   (t > 0.0 ? oracle::integrate(f, 0.0, t, 1e-13) : Complex{}) +
                   oracle::integrate(f, std::max(0.0, t), 40.0, 1e-13);
    }
  return out * kInvSqrt2Pi;
}

TwoTimeCovariance mixed_covariance() {
  const TemporalPulse p({{Complex(1.0, 0.5), Complex(1.5, 2.0), 0}, {Complex(-0.4, 0.0), Complex(3.0, 0.0), 1}});
  std::vector<SeparableTerm> sep{{0, 0, p, p.conj()}, {0, 1, p, p}, {1, 1, p.conj(), p}};
  std::vector<StationaryExpTerm> stat{{0, 0, -0.2, -0.2, 2.5}, {1, 0, 0.3, 0.1, {1.0, 0.5}}};
  Matrix2c delta = Matrix2c::Zero();
  delta(0, 0) = 1.0;
  return {delta, std::move(sep), std::move(stat)};
}

}  // namespace

TEST(InputCovariance, Entries) {
  const auto cov = input_covariance(FockState1(make_exp_pulse(2.0)));
  EXPECT_NEAR(std::abs(cov.regular(0.1, 0.3)(0, 0) - 4.0 * std::exp(-0.8)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(cov.regular(0.0, 0.0)(1, 1) - 4.0), 0.0, 1e-14);
  EXPECT_EQ(cov.regular(0.2, 0.4)(0, 1), Complex(0.0, 0.0));
  EXPECT_EQ(cov.delta_coeff()(0, 0), Complex(1.0, 0.0));
  EXPECT_EQ(cov.delta_coeff()(1, 1), Complex(0.0, 0.0));
}

TEST(Covariance, RejectsBadEntries) {
  EXPECT_THROW(TwoTimeCovariance(Matrix2c::Zero(), {{2, 0, make_exp_pulse(1.0), make_exp_pulse(1.0)}}, {}),
               DomainError);
  EXPECT_THROW(TwoTimeCovariance(Matrix2c::Zero(), {}, {{0, 0, 1.0, 1.0, -0.5}}), DomainError);
}

TEST(Covariance, StationaryEqualTimeIsMeanOfLimits) {
  const TwoTimeCovariance cov(Matrix2c::Zero(), {}, {{0, 0, 1.0, 3.0, 2.0}});
  EXPECT_NEAR(cov.regular(0.5, 0.5)(0, 0).real(), 2.0, 1e-15);
  EXPECT_NEAR(cov.regular(1.0, 0.5)(0, 0).real(), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(cov.regular(0.5, 1.0)(0, 0).real(), 3.0 * std::exp(-1.0), 1e-15);
}

TEST(WignerClosedForm, StationaryRuleAtZeroFrequency) {
  const TwoTimeCovariance cov(Matrix2c::Zero(), {}, {{0, 0, 0.7, 0.7, 1.3}});
  EXPECT_NEAR(std::abs(wigner_closed_form(cov)(0.4, 0.0)(0, 0) - kInvSqrt2Pi * 2.0 * 0.7 / 1.3), 0.0, 1e-15);
}

TEST(WignerClosedForm, InputSpectrumFormula) {
  const auto s = wigner_closed_form(single_photon_covariance(make_exp_pulse(2.0)));
  for (double t : {0.0, 0.5, 2.0})
    for (double w : {-10.0, 0.0, 3.0}) {
      const Complex reg = 4.0 * std::exp(-2.0 * t) / (2.0 + kI * w);
      const Matrix2c v = s(t, w);
      EXPECT_NEAR(std::abs(v(0, 0) - kInvSqrt2Pi * (std::exp(Complex(0.0, -w * t)) + reg)), 0.0, 1e-15);
      EXPECT_NEAR(std::abs(v(1, 1) - kInvSqrt2Pi * reg), 0.0, 1e-15);
      EXPECT_EQ(v(0, 1), Complex(0.0, 0.0));
    }
}

TEST(WignerClosedForm, MatchesAdaptiveQuadrature) {
  const auto cov = mixed_covariance();
  const auto s = wigner_closed_form(cov);
  for (double t : {0.0, 0.35, 1.2})
    for (double w : {-6.0, 0.0, 2.5}) {
      EXPECT_LT((s(t, w) - wigner_by_quadrature(cov, t, w)).cwiseAbs().maxCoeff(), 1e-9) << t << " " << w;
    }
}

TEST(WignerNumeric, MatchesClosedForm) {
  const auto cov = mixed_covariance();
  const auto t = UniformGrid::linspace(0.0, 2.0, 21);
  const auto w = UniformGrid::linspace(-15.0, 15.0, 31);
  const auto numeric = wigner_numeric(cov, t, w);
  EXPECT_EQ(numeric.provenance, Provenance::numeric_oracle);
  const auto closed = grid_eval(wigner_closed_form(cov), t, w);
  EXPECT_LT(max_abs_deviation(closed, numeric) / peak_magnitude(closed), 1e-8);
}

TEST(WignerNumeric, SampledPulse) {
  const auto grid = UniformGrid::linspace(0.0, 20.0, 20001);
  const auto p = TemporalPulse::from_samples(make_exp_pulse(2.0).sample(grid));
  const auto t = UniformGrid::linspace(0.0, 2.0, 5);
  const auto w = UniformGrid::linspace(-5.0, 5.0, 5);
  EXPECT_THROW(wigner_closed_form(single_photon_covariance(p)), NotAnalyticError);
  const auto numeric = wigner_numeric(single_photon_covariance(p), t, w);
  const auto closed = grid_eval(wigner_closed_form(single_photon_covariance(make_exp_pulse(2.0))), t, w);
  EXPECT_LT(max_abs_deviation(closed, numeric), 1e-4);
}

TEST(WignerNumeric, WindowTooSmall) {
  const auto cov = single_photon_covariance(make_exp_pulse(0.5));
  NumericWignerOptions opts;
  opts.window = 1.0;
  try {
    wigner_numeric(cov, UniformGrid::linspace(0.0, 1.0, 2), UniformGrid::linspace(0.0, 1.0, 2), opts);
    FAIL() << "expected WindowError";
  } catch (const WindowError& e) {
    EXPECT_GT(e.suggested_window(), 1.0);
  }
}

TEST(SpectrumExport, Csv) {
  const auto g = grid_eval(wigner_closed_form(single_photon_covariance(make_exp_pulse(2.0))),
                           UniformGrid::linspace(0.0, 1.0, 2), UniformGrid::linspace(-1.0, 1.0, 3));
  std::ostringstream out;
  write_spectrum_csv(out, g);
  const std::string text = out.str();
  EXPECT_EQ(text.find('\r'), std::string::npos);
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "t,omega,entry,re,im");
  std::getline(in, line);
  EXPECT_EQ(line.substr(0, 40), "0.000000000000e+00,-1.000000000000e+00,1");
  std::size_t rows = 1;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 2u * 3u * 4u);
}

TEST(SpectrumExport, Json) {
  const auto g = grid_eval(wigner_closed_form(single_photon_covariance(make_exp_pulse(2.0))),
                           UniformGrid::linspace(0.0, 1.0, 2), UniformGrid::linspace(-1.0, 1.0, 3));
  std::ostringstream out;
  write_spectrum_json(out, g);
  const std::string text = out.str();
  EXPECT_NE(text.find("\"provenance\":\"closed_form\""), std::string::npos);
  EXPECT_NE(text.find("\"22\""), std::string::npos);
}
