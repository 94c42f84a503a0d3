#pragma once

#include <string>

#include "pw/rational.hpp"
#include "pw/systems.hpp"

namespace pw {

/// Cavity g (mode a1: kappa, omega1 = g.omega0) directly coupled to an
/// undamped mode a2 through H_int = conj(alpha) a1^dagger a2 + alpha a1 a2^dagger.
struct DirectCoupling {
  CavityModel g;
  double omega2 = 0.0;
  Complex alpha{0.0, 0.0};
};

/// [[sqrt(r), e^{-i phi} sqrt(1-r)], [-e^{i phi} sqrt(1-r), sqrt(r)]] with r in (0, 1).
class BeamSplitter {
 public:
  BeamSplitter(double reflectivity, double phase = 0.0);

  [[nodiscard]] double reflectivity() const { return reflectivity_; }
  [[nodiscard]] double phase() const { return phase_; }
  [[nodiscard]] Matrix2c matrix() const;
  [[nodiscard]] bool is_unitary(double tolerance = 1e-12) const;

 private:
  double reflectivity_;
  double phase_;
};

/// Single-mode SLH triple (S, L = coupling_gain * a, H). Only the coupling
/// gain enters the transfer functions; H is carried as a label.
struct SlhTriple {
  Complex scattering{1.0, 0.0};
  double coupling_gain = 0.0;
  std::string hamiltonian = "omega0 a^dagger a";
};

/// Multiplier of the input spectrum for the directly coupled pair:
/// [-(kappa/2)(w+w2)i - (w+w1)(w+w2) + |alpha|^2] / [(kappa/2)(w+w2)i - (w+w1)(w+w2) + |alpha|^2]
Rational direct_coupling_transfer(const DirectCoupling& dc);

/// Multiplier of the input spectrum for the cavity closed in a beamsplitter loop:
/// [-q(w+w1)i + kappa/2] / [q(w+w1)i + kappa/2], q = (1 - sqrt r)/(1 + sqrt r).
Rational feedback_transfer(const CavityModel& m, const BeamSplitter& bs);

/// kappa (1 + sqrt r)/(1 - sqrt r)
double effective_decay_rate(double kappa, const BeamSplitter& bs);

/// S -> -S, L -> L sqrt((1 + sqrt r)/(1 - sqrt r)), H unchanged.
SlhTriple feedback_slh_reduce(const SlhTriple& sys, const BeamSplitter& bs);

SlhTriple cavity_slh(const CavityModel& m);

/// Input-output multiplier of a single-mode SLH system with de-tuning omega1:
/// S [1 - gain^2 / (i omega + i omega1 + gain^2/2)].
Rational slh_transfer(const SlhTriple& sys, double omega1);

}  // namespace pw
