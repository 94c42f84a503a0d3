#include "pw/systems.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "pw/errors.hpp"

namespace pw {

void CavityModel::validate() const {
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) throw DomainError("cavity decay rate must satisfy kappa >= 0");
  if (!std::isfinite(omega0)) throw DomainError("cavity de-tuning must be finite");
}

Complex ImpulseResponse::operator()(double t) const {
  Complex acc{0.0, 0.0};
  for (const ExpTerm& term : terms) acc += term(t);
  return acc;
}

ImpulseResponse cavity_impulse_response(const CavityModel& m) {
  m.validate();
  ImpulseResponse g;
  if (m.kappa > 0.0) g.terms.push_back(ExpTerm{-m.kappa, Complex(0.5 * m.kappa, m.omega0), 0});
  return g;
}

Rational cavity_transfer(const CavityModel& m) {
  m.validate();
  // (i omega + i omega0 - kappa/2) / (i omega + i omega0 + kappa/2)
  const Complex shift = kI * m.omega0;
  return {Polynomial::linear(shift - 0.5 * m.kappa, kI), Polynomial::linear(shift + 0.5 * m.kappa, kI)};
}

DoubledTransfer cavity_doubled_transfer(const CavityModel& m) {
  const Rational g = cavity_transfer(m);
  return DoubledTransfer([g](double omega) {
    Matrix2c xi = Matrix2c::Zero();
    xi(0, 0) = g(omega);
    xi(1, 1) = std::conj(g(-omega));
    return xi;
  });
}

Matrix2c drift_matrix(const CavityModel& m) {
  Matrix2c a = Matrix2c::Zero();
  a(0, 0) = Complex(-0.5 * m.kappa, -m.omega0);
  a(1, 1) = Complex(-0.5 * m.kappa, m.omega0);
  return a;
}

Matrix2c drift_matrix(const DpaModel& m) {
  Matrix2c a;
  a << -0.5 * m.kappa, 0.5 * m.epsilon, 0.5 * m.epsilon, -0.5 * m.kappa;
  return a;
}

Matrix2c dpa_propagator(const DpaModel& m, double t) {
  const double damp = std::exp(-0.5 * m.kappa * t);
  Matrix2c e;
  const double c = damp * std::cosh(0.5 * m.epsilon * t);
  const double s = damp * std::sinh(0.5 * m.epsilon * t);
  e << c, s, s, c;
  return e;
}

bool stability_check(const CavityModel& m) {
  Eigen::ComplexEigenSolver<Matrix2c> solver(drift_matrix(m), false);
  return (solver.eigenvalues().real().array() < 0.0).all();
}

bool stability_check(const DpaModel& m) {
  Eigen::ComplexEigenSolver<Matrix2c> solver(drift_matrix(m), false);
  return (solver.eigenvalues().real().array() < 0.0).all();
}

void require_stable(const DpaModel& m) {
  if (!(m.epsilon > 0.0) || !stability_check(m)) {
    throw StabilityError("DPA is not stable: requires (0<ε<κ), got κ=" + std::to_string(m.kappa) +
                         ", ε=" + std::to_string(m.epsilon));
  }
}

DoubledTransfer dpa_doubled_transfer(const DpaModel& m) {
  require_stable(m);
  const double kappa = m.kappa;
  const double eps = m.epsilon;
  // (i omega - A)^{-1} in the eigenbasis of X: rates (kappa -+ eps)/2.
  return DoubledTransfer([kappa, eps](double omega) {
    const Complex slow = 1.0 / (kI * omega + 0.5 * (kappa - eps));
    const Complex fast = 1.0 / (kI * omega + 0.5 * (kappa + eps));
    const Complex even = 0.5 * (slow + fast);
    const Complex odd = 0.5 * (slow - fast);
    Matrix2c xi;
    xi << 1.0 - kappa * even, -kappa * odd, -kappa * odd, 1.0 - kappa * even;
    return xi;
  });
}

}  // namespace pw
