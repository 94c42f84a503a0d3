#pragma once

#include <string>
#include <variant>

#include "pw/covariance.hpp"
#include "pw/pulses.hpp"

namespace pw {

/// Continuous-mode single-photon Fock state B^dagger(xi)|0>.
class FockState1 {
 public:
  /// Throws DomainError unless ||shape|| = 1 within 1e-9.
  explicit FockState1(TemporalPulse shape);
  static FockState1 normalized(const TemporalPulse& shape);
  /// Skips the normalization check. Test hook only.
  static FockState1 unchecked(TemporalPulse shape);

  [[nodiscard]] const TemporalPulse& shape() const { return shape_; }

 private:
  struct Unchecked {};
  FockState1(TemporalPulse shape, Unchecked) : shape_(std::move(shape)) {}
  TemporalPulse shape_;
};

/// Single-photon coherent state exp(alpha B^dagger(xi) - alpha* B(xi))|0>, |alpha| = 1.
class CoherentContState {
 public:
  CoherentContState(Complex alpha, TemporalPulse shape);
  static CoherentContState from_phase(double theta, TemporalPulse shape);

  [[nodiscard]] Complex alpha() const { return alpha_; }
  [[nodiscard]] const TemporalPulse& shape() const { return shape_; }
  /// eta = alpha xi
  [[nodiscard]] TemporalPulse amplitude_pulse() const { return shape_.scaled(alpha_); }

 private:
  Complex alpha_;
  TemporalPulse shape_;
};

/// Continuous-mode number state; carried as data only.
struct NumberState {
  int photons = 0;
  TemporalPulse shape;
};

/// Output of an active linear system driven by one photon: a pulse pair and a Gaussian part.
class PhotonGaussianState {
 public:
  PhotonGaussianState(TemporalPulse minus, TemporalPulse plus, TwoTimeCovariance gaussian_part);

  [[nodiscard]] const TemporalPulse& minus() const { return minus_; }
  [[nodiscard]] const TemporalPulse& plus() const { return plus_; }
  [[nodiscard]] const TwoTimeCovariance& gaussian_part() const { return gaussian_; }

 private:
  TemporalPulse minus_;
  TemporalPulse plus_;
  TwoTimeCovariance gaussian_;
};

/// <1_xi| B(xi) |1_xi>, identically zero.
Complex mean_amplitude(const FockState1& s);
/// <alpha_xi| B(xi) |alpha_xi> = alpha ||xi||^2.
Complex mean_amplitude(const CoherentContState& s);

double photon_number(const FockState1& s);
double photon_number(const CoherentContState& s);

/// <1_xi| B^dagger(zeta) B(chi) |1_xi> = <zeta, xi> <xi, chi>.
Complex normal_ordered_moment(const FockState1& s, const TemporalPulse& zeta, const TemporalPulse& chi);

/// exp(-||mu||^2 / 2 + i (<eta, mu> + <mu, eta>)) with eta = alpha xi, the
/// characteristic functional E[exp(i (B^dagger(mu) + B(mu)))].
Complex coherent_characteristic(const CoherentContState& s, const TemporalPulse& mu);
/// Same functional with mu given in the frequency domain.
Complex coherent_characteristic(const CoherentContState& s, const SpectralPulse& mu);

using AnyState = std::variant<FockState1, CoherentContState, PhotonGaussianState>;

/// {"kind": "fock1|coherent|photon_gaussian", "shape": {...}, "alpha": {...}}.
/// photon_gaussian stores {"minus", "plus"} under "shape" and the Gaussian part under "gaussian".
std::string state_to_json(const AnyState& state);
/// Throws DomainError on unknown kinds or malformed documents.
AnyState state_from_json(const std::string& text);

}  // namespace pw
