#include "pw/networks.hpp"

#include <cmath>

#include "pw/errors.hpp"

namespace pw {

BeamSplitter::BeamSplitter(double reflectivity, double phase) : reflectivity_(reflectivity), phase_(phase) {
  if (!(reflectivity > 0.0 && reflectivity < 1.0)) {
    throw DomainError("beamsplitter reflectivity must lie in (0, 1)");
  }
  if (!std::isfinite(phase)) throw DomainError("beamsplitter phase must be finite");
}

Matrix2c BeamSplitter::matrix() const {
  const double r = std::sqrt(reflectivity_);
  const double t = std::sqrt(1.0 - reflectivity_);
  Matrix2c s;
  s << r, std::polar(t, -phase_), -std::polar(t, phase_), r;
  return s;
}

bool BeamSplitter::is_unitary(double tolerance) const {
  const Matrix2c s = matrix();
  return (s.adjoint() * s - Matrix2c::Identity()).cwiseAbs().maxCoeff() <= tolerance;
}

Rational direct_coupling_transfer(const DirectCoupling& dc) {
  dc.g.validate();
  const double half = 0.5 * dc.g.kappa;
  const double w1 = dc.g.omega0;
  const double w2 = dc.omega2;
  const double a2 = std::norm(dc.alpha);
  // (w + w1)(w + w2) = w^2 + (w1 + w2) w + w1 w2
  const Polynomial product({w1 * w2, w1 + w2, 1.0});
  const Polynomial damping = Polynomial::linear(kI * half * w2, kI * half);
  const Polynomial base = Polynomial::constant(a2) + product.scaled(-1.0);
  return Rational(base + damping.scaled(-1.0), base + damping).simplified();
}

Rational feedback_transfer(const CavityModel& m, const BeamSplitter& bs) {
  m.validate();
  const double sr = std::sqrt(bs.reflectivity());
  const double q = (1.0 - sr) / (1.0 + sr);
  const double half = 0.5 * m.kappa;
  const double w1 = m.omega0;
  return {Polynomial::linear(half - kI * q * w1, -kI * q), Polynomial::linear(half + kI * q * w1, kI * q)};
}

double effective_decay_rate(double kappa, const BeamSplitter& bs) {
  const double sr = std::sqrt(bs.reflectivity());
  return kappa * (1.0 + sr) / (1.0 - sr);
}

SlhTriple feedback_slh_reduce(const SlhTriple& sys, const BeamSplitter& bs) {
  const double sr = std::sqrt(bs.reflectivity());
  SlhTriple out = sys;
  out.scattering = -sys.scattering;
  out.coupling_gain = sys.coupling_gain * std::sqrt((1.0 + sr) / (1.0 - sr));
  return out;
}

SlhTriple cavity_slh(const CavityModel& m) {
  m.validate();
  return SlhTriple{{1.0, 0.0}, std::sqrt(m.kappa), "omega0 a^dagger a"};
}

Rational slh_transfer(const SlhTriple& sys, double omega1) {
  const double k = sys.coupling_gain * sys.coupling_gain;
  const Rational g = cavity_transfer(CavityModel{k, omega1});
  return sys.scattering * g;
}

}  // namespace pw
