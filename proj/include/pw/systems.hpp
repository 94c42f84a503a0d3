#pragma once

#include <functional>
#include <vector>

#include "pw/pulses.hpp"
#include "pw/rational.hpp"
#include "pw/types.hpp"

namespace pw {

/// Empty cavity: da/dt = -(kappa/2 + i omega0) a - sqrt(kappa) b_in,
/// b_out = sqrt(kappa) a + b_in. `omega0` is the de-tuning, also written omega_1
/// when the cavity sits inside a network.
struct CavityModel {
  double kappa = 0.0;
  double omega0 = 0.0;

  void validate() const;
};

/// Degenerate parametric amplifier with decay `kappa` and pump `epsilon`.
/// Stable for 0 < epsilon < kappa.
struct DpaModel {
  double kappa = 0.0;
  double epsilon = 0.0;
};

/// delta_coeff * delta(t) + sum of causal exponential terms.
struct ImpulseResponse {
  Complex delta_coeff{1.0, 0.0};
  std::vector<ExpTerm> terms;

  /// Regular part at t.
  [[nodiscard]] Complex operator()(double t) const;
};

/// omega -> Xi(omega), the transfer matrix of the doubled field (b, b^dagger).
class DoubledTransfer {
 public:
  explicit DoubledTransfer(std::function<Matrix2c(double)> fn) : fn_(std::move(fn)) {}
  [[nodiscard]] Matrix2c operator()(double omega) const { return fn_(omega); }

 private:
  std::function<Matrix2c(double)> fn_;
};

ImpulseResponse cavity_impulse_response(const CavityModel& m);

/// 1 - kappa / (i omega + i omega0 + kappa/2) as a rational function of omega.
Rational cavity_transfer(const CavityModel& m);

/// diag(G(omega), conj(G(-omega))) for the cavity.
DoubledTransfer cavity_doubled_transfer(const CavityModel& m);

/// Drift of the doubled mode (a, a^dagger).
Matrix2c drift_matrix(const CavityModel& m);
/// -1/2 [[kappa, -epsilon], [-epsilon, kappa]]
Matrix2c drift_matrix(const DpaModel& m);

/// e^{A t} = e^{-kappa t/2} [cosh(eps t/2) I + sinh(eps t/2) X], t >= 0.
Matrix2c dpa_propagator(const DpaModel& m, double t);

/// I - kappa (i omega I - A)^{-1}. Throws StabilityError unless 0 < epsilon < kappa.
DoubledTransfer dpa_doubled_transfer(const DpaModel& m);

/// True iff every drift eigenvalue has negative real part.
bool stability_check(const CavityModel& m);
bool stability_check(const DpaModel& m);

/// Throws StabilityError with a message citing (0<eps<kappa).
void require_stable(const DpaModel& m);

}  // namespace pw
