#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "pw/rational.hpp"
#include "pw/types.hpp"

namespace pw {

/// amplitude * t^power * exp(-rate t) for t >= 0, zero for t < 0.
///
/// Re(rate) > 0 is enforced by TemporalPulse. `power` is nonzero only for the
/// confluent limits produced by coincident decay rates.
struct ExpTerm {
  Complex amplitude{0.0, 0.0};
  Complex rate{1.0, 0.0};
  int power = 0;

  [[nodiscard]] Complex operator()(double t) const;
};

/// Metadata recorded by the numeric inverse transform.
struct TruncationInfo {
  double omega_window = 0.0;  // integration over [-omega_window, omega_window]
  double time_window = 0.0;   // FFT period
  double tail_error = 0.0;    // estimated bound on the discarded spectral tail
  std::size_t fft_size = 0;
};

/// Uniformly sampled complex signal. Evaluation between samples is cubic;
/// outside [start, stop()] the signal is zero.
struct SampledSignal {
  double start = 0.0;
  double step = 0.0;
  std::vector<Complex> values;
  std::optional<TruncationInfo> truncation;

  [[nodiscard]] double stop() const {
    return values.empty() ? start : start + step * static_cast<double>(values.size() - 1);
  }
  [[nodiscard]] double time(std::size_t i) const { return start + step * static_cast<double>(i); }
  [[nodiscard]] Complex operator()(double t) const;
};

/// Photon wave packet in the time domain.
///
/// Analytic pulses are finite sums of causal exponential terms and may carry a
/// sample grid for export. Sampled-only pulses have no terms.
class TemporalPulse {
 public:
  /// The zero pulse.
  TemporalPulse() = default;
  explicit TemporalPulse(std::vector<ExpTerm> terms);
  static TemporalPulse from_samples(SampledSignal samples);

  [[nodiscard]] bool is_analytic() const { return analytic_; }
  [[nodiscard]] bool is_zero() const { return analytic_ && terms_.empty(); }
  [[nodiscard]] const std::vector<ExpTerm>& terms() const { return terms_; }
  [[nodiscard]] const std::optional<SampledSignal>& samples() const { return samples_; }

  [[nodiscard]] Complex operator()(double t) const;

  [[nodiscard]] TemporalPulse conj() const;
  [[nodiscard]] TemporalPulse scaled(Complex c) const;

  /// Samples the pulse on `grid`.
  [[nodiscard]] SampledSignal sample(const UniformGrid& grid) const;
  /// Copy with `sample(grid)` attached. Throws DomainError if the attached
  /// samples of an analytic pulse would disagree with its terms by more than `tolerance`.
  [[nodiscard]] TemporalPulse with_samples(const UniformGrid& grid, double tolerance = 1e-12) const;

  /// Smallest Re(rate) over the terms; +inf for the zero pulse.
  [[nodiscard]] double slowest_rate() const;
  /// [0, 20 / slowest_rate] for analytic pulses, the sample span otherwise.
  [[nodiscard]] double support_end() const;

  friend TemporalPulse operator+(const TemporalPulse& a, const TemporalPulse& b);
  friend TemporalPulse operator-(const TemporalPulse& a, const TemporalPulse& b);

 private:
  std::vector<ExpTerm> terms_;
  std::optional<SampledSignal> samples_;
  bool analytic_ = true;
};

/// Spectrum samples produced by the FFT of a sampled pulse. Keeps what is
/// needed to invert the transform exactly on the original time grid.
struct SpectralSamples {
  double omega_step = 0.0;
  std::vector<Complex> values;  // omega_k = (k - values.size()/2) * omega_step
  double time_start = 0.0;
  double time_step = 0.0;
  std::size_t time_count = 0;

  [[nodiscard]] double omega(std::size_t k) const {
    return (static_cast<double>(k) - static_cast<double>(values.size() / 2)) * omega_step;
  }
  [[nodiscard]] Complex operator()(double omega) const;
};

/// Photon wave packet in the frequency domain,
/// X[omega] = int_0^inf x(t) exp(-i omega t) dt (no 1/sqrt(2 pi) prefactor).
class SpectralPulse {
 public:
  SpectralPulse() = default;
  explicit SpectralPulse(std::vector<Rational> terms) : terms_(std::move(terms)) {}
  static SpectralPulse from_samples(SpectralSamples samples);

  [[nodiscard]] bool is_analytic() const { return analytic_; }
  [[nodiscard]] const std::vector<Rational>& terms() const { return terms_; }
  [[nodiscard]] const std::optional<SpectralSamples>& samples() const { return samples_; }

  [[nodiscard]] Complex operator()(double omega) const;

  /// Pointwise product with a rational multiplier (kept exact for analytic spectra).
  [[nodiscard]] SpectralPulse multiplied(const Rational& multiplier) const;
  /// Pointwise product with an arbitrary function; sampled spectra only.
  [[nodiscard]] SpectralPulse multiplied(const std::function<Complex(double)>& multiplier) const;

  /// Decay rates Re(r) of the poles, written as i omega + r = 0.
  [[nodiscard]] std::vector<Complex> pole_rates() const;

 private:
  std::vector<Rational> terms_;
  std::optional<SpectralSamples> samples_;
  bool analytic_ = true;
};

struct InverseOptions {
  double relative_tail = 1e-6;       // spectral tail bound relative to the spectral peak
  std::size_t max_fft_size = 1u << 23;
};

/// sqrt(2 rate) exp(-rate t), unit norm. Throws DomainError for rate <= 0.
TemporalPulse make_exp_pulse(double rate);

/// Exact rational transform for analytic pulses; trapezoid-weighted FFT for sampled ones.
SpectralPulse to_frequency(const TemporalPulse& pulse);

/// Numeric inverse transform x(t) = (1/2pi) int X[omega] exp(i omega t) domega,
/// sampled on `grid`. Analytic spectra are integrated by FFT after subtracting
/// the first two orders of their expansion at infinity; the truncation window
/// and tail estimate are recorded in the returned samples.
TemporalPulse to_time(const SpectralPulse& spectrum, const UniformGrid& grid,
                      const InverseOptions& options = {});

/// [0, 20 / slowest pole rate] with `count` points.
UniformGrid default_time_grid(const SpectralPulse& spectrum, std::size_t count = 20001);

/// int p*(t) q(t) dt. Closed form for analytic pairs, trapezoid quadrature otherwise.
Complex inner_product(const TemporalPulse& p, const TemporalPulse& q);
double norm(const TemporalPulse& p);
double l2_distance(const TemporalPulse& p, const TemporalPulse& q);

/// (1/2pi) int a*(omega) b(omega) domega by quadrature, the frequency-side
/// counterpart of inner_product under this transform convention.
Complex spectral_inner_product(const SpectralPulse& a, const SpectralPulse& b);

/// Rates closer than this are treated as coincident by `convolve`.
inline constexpr double kConfluentTolerance = 1e-8;

/// Causal convolution int_0^t a(s) b(t - s) ds of two terms, expanded in
/// partial fractions. Coincident rates merge into one higher-power term.
std::vector<ExpTerm> convolve(const ExpTerm& a, const ExpTerm& b);
/// Term-wise convolution of an analytic pulse with an exponential kernel.
TemporalPulse convolve(const TemporalPulse& p, const std::vector<ExpTerm>& kernel);

/// CSV with header `t,re,im`.
void write_pulse_csv(std::ostream& out, const SampledSignal& samples);

}  // namespace pw
