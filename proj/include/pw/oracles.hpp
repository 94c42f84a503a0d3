#pragma once

#include <vector>

#include <Eigen/Core>

#include "pw/pulses.hpp"
#include "pw/systems.hpp"

namespace pw {

/// Doubled output pulse (xi^-, xi^+) at each grid time for the doubled input
/// (nu, 0): nu(t) e1 - kappa int_0^t expm(A (t - s)) e1 nu(s) ds, by composite
/// Gauss-Legendre quadrature with a general matrix exponential.
std::vector<Eigen::Vector2cd> dpa_pulse_oracle(const DpaModel& m, const TemporalPulse& input,
                                               const UniformGrid& grid);

/// Regular part of the vacuum output covariance at t != r:
///   -K(t-r) N [t>r] - N K(r-t)^T [t<r] + int K(t-s) N K(r-s)^T ds,
/// K(u) = kappa expm(A u), N = diag(1, 0), integral by quadrature.
Matrix2c dpa_vacuum_oracle(const DpaModel& m, double t, double r);

/// Cavity output pulse through the frequency domain: transfer times spectrum, inverse FFT.
TemporalPulse cavity_pulse_oracle(const CavityModel& m, const TemporalPulse& input, const UniformGrid& grid);

}  // namespace pw
