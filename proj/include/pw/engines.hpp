#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pw/covariance.hpp"
#include "pw/pulses.hpp"
#include "pw/rational.hpp"
#include "pw/systems.hpp"

namespace pw {

/// Every printed coefficient of the closed-form output spectra, covariances and
/// pulses. Passing one to an engine flips its sign; used by the mutation suite.
enum class PrintedCoefficient {
  none,
  // cavity S11: prefactor, numerator terms, denominator terms
  cavity_s11_prefactor,
  cavity_s11_kappa_sq,
  cavity_s11_kappa_gamma,
  cavity_s11_omega0_sq,
  cavity_s11_omega_omega0,
  cavity_s11_gamma_omega0,
  cavity_s11_omega_kappa,
  cavity_s11_omega_gamma,
  cavity_s11_den_gamma,
  cavity_s11_den_omega,
  cavity_s11_den_mid_kappa,
  cavity_s11_den_mid_omega0,
  cavity_s11_den_mid_gamma,
  cavity_s11_den_last_kappa,
  cavity_s11_den_last_omega0,
  cavity_s11_den_last_omega,
  // cavity S22
  cavity_s22_prefactor,
  cavity_s22_kappa_sq,
  cavity_s22_kappa_gamma,
  cavity_s22_omega0_sq,
  cavity_s22_omega_omega0,
  cavity_s22_gamma_omega0,
  cavity_s22_omega_kappa,
  cavity_s22_omega_gamma,
  cavity_s22_den_gamma,
  cavity_s22_den_omega,
  cavity_s22_den_mid_kappa,
  cavity_s22_den_mid_omega0,
  cavity_s22_den_mid_gamma,
  cavity_s22_den_last_kappa,
  cavity_s22_den_last_omega0,
  cavity_s22_den_last_omega,
  // DPA output pulses: a e^{-gamma t} + b e^{-(kappa+eps)t/2} + c e^{-(kappa-eps)t/2}
  xi_minus_a,
  xi_minus_b,
  xi_minus_c,
  xi_plus_a,
  xi_plus_b,
  xi_plus_c,
  // DPA Gaussian part: amplitudes at rates (kappa+eps)/2 (fast) and (kappa-eps)/2 (slow)
  chi11_fast,
  chi11_slow,
  chi12_fast,
  chi12_slow,
  chi22_fast,
  chi22_slow,
  // DPA S_out,11
  s_out11_fast_minus,
  s_out11_slow_minus,
  s_out11_fast_plus,
  s_out11_slow_plus,
  s_out11_delta,
  s_out11_minus_a,
  s_out11_minus_b,
  s_out11_minus_c,
  s_out11_plus_a,
  s_out11_plus_b,
  s_out11_plus_c,
  // DPA S_out,12
  s_out12_fast_minus,
  s_out12_slow_minus,
  s_out12_fast_plus,
  s_out12_slow_plus,
  s_out12_minus_a,
  s_out12_minus_b,
  s_out12_minus_c,
  s_out12_plus_a,
  s_out12_plus_b,
  s_out12_plus_c,
};

/// All coefficients except `none`, in declaration order.
std::span<const PrintedCoefficient> printed_coefficients();
std::string_view coefficient_name(PrintedCoefficient c);

struct PulsePair {
  TemporalPulse minus;
  TemporalPulse plus;
};

struct OutputPhotonResult {
  TemporalPulse pulse;
  std::optional<PulsePair> pulse_pair;
  TwoTimeCovariance covariance;
  std::string source;
};

/// Output pulse of the cavity. Analytic inputs are convolved term by term with
/// the impulse response; sampled inputs go through the frequency-domain multiply.
TemporalPulse cavity_output_pulse(const CavityModel& m, const TemporalPulse& input);

/// Output covariance for the exponential input of damping `gamma`.
TwoTimeCovariance cavity_output_covariance(const CavityModel& m, double gamma);

/// (1/sqrt(2 pi)) [diag(e^{-i w t}, 0) + diag(eta(t) S11[w], eta*(t) S22[w])]
/// with the printed S11, S22. kappa = 0 and the confluent case
/// kappa/2 + i omega0 = gamma fall back to the term rules.
SpectrumFunction cavity_output_wigner(const CavityModel& m, double gamma,
                                      PrintedCoefficient flip = PrintedCoefficient::none);

OutputPhotonResult cavity_output(const CavityModel& m, double gamma);

/// (xi^-, xi^+) for the exponential input of damping `gamma`, doubled as (nu, 0).
PulsePair dpa_output_pulses(const DpaModel& m, double gamma, PrintedCoefficient flip = PrintedCoefficient::none);

/// delta [[1,0],[0,0]] + chi (stationary) + Delta(xi^-, xi^+) Delta(xi^-, xi^+)^dagger, where
/// Delta(a, b) = [[a, b*], [b, a*]].
TwoTimeCovariance dpa_output_covariance(const DpaModel& m, double gamma,
                                        PrintedCoefficient flip = PrintedCoefficient::none);

/// The printed S_out entries, with S_out,21 = S_out,12 and S_out,22 = S_out,11 - e^{-i w t}/sqrt(2 pi).
SpectrumFunction dpa_output_wigner(const DpaModel& m, double gamma,
                                   PrintedCoefficient flip = PrintedCoefficient::none);

OutputPhotonResult dpa_output(const DpaModel& m, double gamma);

/// The Gaussian part of the DPA output covariance alone.
TwoTimeCovariance dpa_gaussian_part(const DpaModel& m, PrintedCoefficient flip = PrintedCoefficient::none);

/// to_time(multiplier * input) on `grid`.
TemporalPulse network_output_pulse(const Rational& multiplier, const SpectralPulse& input, const UniformGrid& grid,
                                   const InverseOptions& options = {});

/// Wigner spectrum of the single-photon output of a passive network. The
/// transform side uses the exact product spectrum; eta(t) is the numeric
/// inverse on `pulse_grid`.
SpectrumFunction network_output_wigner(const Rational& multiplier, const SpectralPulse& input,
                                      const UniformGrid& pulse_grid);

/// |pulse(t)|^2 on the grid.
std::vector<double> detection_probability(const TemporalPulse& pulse, const UniformGrid& grid);

}  // namespace pw
