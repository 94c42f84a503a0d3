#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "pw/pulses.hpp"
#include "pw/types.hpp"

namespace pw {

class FockState1;

/// f(t) h(r) added to matrix entry (row, col). Entries are 0-based; no
/// implicit conjugation, callers pass pre-conjugated pulses.
struct SeparableTerm {
  int row = 0;
  int col = 0;
  TemporalPulse f;
  TemporalPulse h;
};

/// c_plus e^{-rate (t - r)} for t > r and c_minus e^{-rate (r - t)} for t < r.
struct StationaryExpTerm {
  int row = 0;
  int col = 0;
  Complex c_plus{0.0, 0.0};
  Complex c_minus{0.0, 0.0};
  Complex rate{1.0, 0.0};
};

/// Two-time covariance of the doubled field (b, b^dagger):
///   R(t, r) = delta_coeff * delta(t - r) + separable terms + stationary terms.
class TwoTimeCovariance {
 public:
  TwoTimeCovariance() = default;
  TwoTimeCovariance(Matrix2c delta_coeff, std::vector<SeparableTerm> separable,
                    std::vector<StationaryExpTerm> stationary);

  [[nodiscard]] const Matrix2c& delta_coeff() const { return delta_coeff_; }
  [[nodiscard]] const std::vector<SeparableTerm>& separable() const { return separable_; }
  [[nodiscard]] const std::vector<StationaryExpTerm>& stationary() const { return stationary_; }

  /// Regular (non-delta) part at (t, r). At t == r stationary terms contribute
  /// the mean of their two one-sided limits; the delta part is reported by
  /// delta_coeff() only.
  [[nodiscard]] Matrix2c regular(double t, double r) const;

  [[nodiscard]] bool is_analytic() const;

 private:
  Matrix2c delta_coeff_ = Matrix2c::Zero();
  std::vector<SeparableTerm> separable_;
  std::vector<StationaryExpTerm> stationary_;
};

/// Delta part [[1,0],[0,0]] plus (1,1): pulse(t) pulse*(r), (2,2): pulse*(t) pulse(r).
/// The covariance of a single photon with the given shape.
TwoTimeCovariance single_photon_covariance(const TemporalPulse& pulse);

/// Covariance of the input field in the single-photon state.
TwoTimeCovariance input_covariance(const FockState1& state);

enum class Provenance { closed_form, numeric_oracle };

/// 2x2 Wigner spectrum sampled on a (t, omega) grid, t-major.
struct WignerSpectrumGrid {
  UniformGrid t_grid;
  UniformGrid omega_grid;
  std::vector<Matrix2c> values;
  Provenance provenance = Provenance::closed_form;

  [[nodiscard]] const Matrix2c& at(std::size_t i, std::size_t j) const {
    return values[i * omega_grid.count + j];
  }
  [[nodiscard]] Matrix2c& at(std::size_t i, std::size_t j) { return values[i * omega_grid.count + j]; }
};

using SpectrumFunction = std::function<Matrix2c(double t, double omega)>;

/// Term-by-term Wigner transform S(t, w) = (1/sqrt(2 pi)) int R(t, tau) e^{-i w tau} dtau:
///   delta M        -> M e^{-i w t}
///   f(t) h(tau)    -> f(t) H(w),  H(w) = int h(tau) e^{-i w tau} dtau
///   stationary     -> e^{-i w t} [c_plus/(rate - i w) + c_minus/(rate + i w)]
/// all scaled by 1/sqrt(2 pi). Throws NotAnalyticError for sampled pulses.
SpectrumFunction wigner_closed_form(const TwoTimeCovariance& cov);

struct NumericWignerOptions {
  /// Bound on the discarded tau-tail, absolute.
  double tail_tolerance = 1e-10;
  /// Half-width of the tau window around the singular points; chosen
  /// automatically when empty. A value too small for `tail_tolerance` throws WindowError.
  std::optional<double> window;
};

/// Numeric oracle for the Wigner spectrum: for every t, the regular part is
/// integrated over tau by composite Gauss-Legendre quadrature split at tau = 0
/// and tau = t; the delta part is added analytically.
WignerSpectrumGrid wigner_numeric(const TwoTimeCovariance& cov, const UniformGrid& t_grid,
                                  const UniformGrid& omega_grid, const NumericWignerOptions& options = {});

/// Dense evaluation of a closed-form spectrum.
WignerSpectrumGrid grid_eval(const SpectrumFunction& fn, const UniformGrid& t_grid,
                             const UniformGrid& omega_grid);

/// max |a - b| over the grid, over all entries or a single (row, col) entry.
double max_abs_deviation(const WignerSpectrumGrid& a, const WignerSpectrumGrid& b,
                         std::optional<std::pair<int, int>> entry = std::nullopt);
/// max |S| over the grid.
double peak_magnitude(const WignerSpectrumGrid& grid,
                      std::optional<std::pair<int, int>> entry = std::nullopt);

/// CSV with header `t,omega,entry,re,im`, entry in {11, 12, 21, 22}.
void write_spectrum_csv(std::ostream& out, const WignerSpectrumGrid& grid);
/// JSON grid document: provenance, both grids, and re/im matrices per entry.
void write_spectrum_json(std::ostream& out, const WignerSpectrumGrid& grid);

}  // namespace pw
