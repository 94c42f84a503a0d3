#include "pw/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include <nlohmann/json.hpp>

#include "detail/numerics.hpp"
#include "pw/errors.hpp"
#include "pw/states.hpp"

namespace pw {

namespace {

void check_entry(int row, int col) {
  if (row < 0 || row > 1 || col < 0 || col > 1) throw DomainError("covariance entry index outside {1,2}");
}

// |f(t)| bound for t >= x from the term list: sum |a| x^n e^{-Re(r) x}, valid once x >= n / Re(r).
double term_tail(const TemporalPulse& p, double x) {
  double acc = 0.0;
  for (const ExpTerm& term : p.terms()) {
    const double decay = term.rate.real();
    const double x_eff = std::max(x, term.power / decay);
    acc += std::abs(term.amplitude) * std::pow(x_eff, term.power) * std::exp(-decay * x) / decay;
  }
  return acc;
}

int entry_index(std::size_t k) { return k == 0 ? 11 : k == 1 ? 12 : k == 2 ? 21 : 22; }

}  // namespace

TwoTimeCovariance::TwoTimeCovariance(Matrix2c delta_coeff, std::vector<SeparableTerm> separable,
                                     std::vector<StationaryExpTerm> stationary)
    : delta_coeff_(std::move(delta_coeff)), separable_(std::move(separable)), stationary_(std::move(stationary)) {
  if (!delta_coeff_.allFinite()) throw DomainError("non-finite delta coefficient");
  for (const auto& s : separable_) check_entry(s.row, s.col);
  for (const auto& s : stationary_) {
    check_entry(s.row, s.col);
    if (!(s.rate.real() > 0.0)) throw DomainError("stationary term needs Re(rate) > 0");
  }
}

Matrix2c TwoTimeCovariance::regular(double t, double r) const {
  Matrix2c out = Matrix2c::Zero();
  for (const auto& s : separable_) out(s.row, s.col) += s.f(t) * s.h(r);
  for (const auto& s : stationary_) {
    if (t > r) {
      out(s.row, s.col) += s.c_plus * std::exp(-s.rate * (t - r));
    } else if (t < r) {
      out(s.row, s.col) += s.c_minus * std::exp(-s.rate * (r - t));
    } else {
      out(s.row, s.col) += 0.5 * (s.c_plus + s.c_minus);
    }
  }
  return out;
}

bool TwoTimeCovariance::is_analytic() const {
  return std::all_of(separable_.begin(), separable_.end(),
                     [](const SeparableTerm& s) { return s.f.is_analytic() && s.h.is_analytic(); });
}

TwoTimeCovariance single_photon_covariance(const TemporalPulse& pulse) {
  Matrix2c delta = Matrix2c::Zero();
  delta(0, 0) = 1.0;
  std::vector<SeparableTerm> sep{{0, 0, pulse, pulse.conj()}, {1, 1, pulse.conj(), pulse}};
  return TwoTimeCovariance(delta, std::move(sep), {});
}

TwoTimeCovariance input_covariance(const FockState1& state) { return single_photon_covariance(state.shape()); }

SpectrumFunction wigner_closed_form(const TwoTimeCovariance& cov) {
  struct Sep {
    int row, col;
    TemporalPulse f;
    SpectralPulse h;
  };
  std::vector<Sep> seps;
  for (const auto& s : cov.separable()) {
    if (!s.f.is_analytic() || !s.h.is_analytic()) {
      throw NotAnalyticError("covariance contains sampled pulses; use wigner_numeric");
    }
    seps.push_back({s.row, s.col, s.f, to_frequency(s.h)});
  }
  const Matrix2c delta = cov.delta_coeff();
  const auto stationary = cov.stationary();
  return [delta, seps = std::move(seps), stationary](double t, double omega) {
    const Complex phase = std::exp(Complex(0.0, -omega * t));
    Matrix2c out = delta * phase;
    for (const auto& s : seps) out(s.row, s.col) += s.f(t) * s.h(omega);
    for (const auto& s : stationary) {
      out(s.row, s.col) += phase * (s.c_plus / (s.rate - kI * omega) + s.c_minus / (s.rate + kI * omega));
    }
    return Matrix2c(out * kInvSqrt2Pi);
  };
}

WignerSpectrumGrid wigner_numeric(const TwoTimeCovariance& cov, const UniformGrid& t_grid,
                                  const UniformGrid& omega_grid, const NumericWignerOptions& options) {
  WignerSpectrumGrid out{t_grid, omega_grid, {}, Provenance::numeric_oracle};
  out.values.assign(t_grid.size() * omega_grid.size(), Matrix2c::Zero());
  if (t_grid.empty() || omega_grid.empty()) return out;

  const double tol = options.tail_tolerance;
  double fastest = 0.0;

  // Stationary terms: tail of int_{|u|>L} |c| e^{-Re(rate) |u|} du.
  double stat_len = 0.0;
  for (const auto& s : cov.stationary()) {
    const double a = s.rate.real();
    const double c = std::abs(s.c_plus) + std::abs(s.c_minus);
    fastest = std::max(fastest, std::abs(s.rate));
    if (c > 0.0) stat_len = std::max(stat_len, std::log(std::max(1.0, c / (a * tol))) / a);
  }

  // Separable terms: tau runs over the support of h.
  double f_max = 0.0;
  double sep_lo = 0.0;
  double sep_hi = 0.0;
  bool has_sep = false;
  for (const auto& s : cov.separable()) {
    has_sep = true;
    for (std::size_t i = 0; i < t_grid.size(); ++i) f_max = std::max(f_max, std::abs(s.f(t_grid[i])));
    if (s.h.is_analytic()) {
      for (const ExpTerm& term : s.h.terms()) fastest = std::max(fastest, std::abs(term.rate));
    } else {
      const auto& sm = *s.h.samples();
      sep_lo = std::min(sep_lo, sm.start);
      sep_hi = std::max(sep_hi, sm.stop());
    }
  }
  for (const auto& s : cov.separable()) {
    if (!s.h.is_analytic() || s.h.terms().empty()) continue;
    double len = 1.0 / s.h.slowest_rate();
    while (f_max * term_tail(s.h, len) > tol) len *= 1.25;
    sep_hi = std::max(sep_hi, len);
  }

  const double needed = std::max(stat_len, sep_hi);
  if (options.window) {
    if (*options.window < needed) {
      throw WindowError("tau window too small for the requested tail tolerance", needed);
    }
    stat_len = std::max(stat_len, *options.window);
    if (has_sep) sep_hi = std::max(sep_hi, *options.window);
  }

  const double panel = std::min(0.5, 10.0 / (omega_grid.max_abs() + fastest));
  const auto& rule = detail::gauss16();
  const std::size_t nw = omega_grid.size();
  const double w0 = omega_grid[0];
  const double dw = omega_grid.size() > 1 ? omega_grid.step() : 0.0;

  std::vector<double> acc(nw * 8);
  std::vector<double> nodes, weights;
  std::vector<double> breaks;
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    const double t = t_grid[i];
    double lo = has_sep ? sep_lo : t;
    double hi = has_sep ? sep_hi : t;
    if (!cov.stationary().empty()) {
      lo = std::min(lo, t - stat_len);
      hi = std::max(hi, t + stat_len);
    }
    breaks = {lo, hi};
    if (0.0 > lo && 0.0 < hi) breaks.push_back(0.0);
    if (t > lo && t < hi) breaks.push_back(t);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    nodes.clear();
    weights.clear();
    for (std::size_t b = 0; b + 1 < breaks.size(); ++b) {
      const double width = breaks[b + 1] - breaks[b];
      const auto panels = static_cast<std::size_t>(std::ceil(width / panel));
      detail::append_panels(breaks[b], breaks[b + 1], std::max<std::size_t>(panels, 1), rule, nodes, weights);
    }

    std::fill(acc.begin(), acc.end(), 0.0);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const double tau = nodes[k];
      const Matrix2c v = cov.regular(t, tau) * weights[k];
      const double vr[4] = {v(0, 0).real(), v(0, 1).real(), v(1, 0).real(), v(1, 1).real()};
      const double vi[4] = {v(0, 0).imag(), v(0, 1).imag(), v(1, 0).imag(), v(1, 1).imag()};
      double pr = std::cos(w0 * tau), pi = -std::sin(w0 * tau);
      const double sr = std::cos(dw * tau), si = -std::sin(dw * tau);
      for (std::size_t j = 0; j < nw; ++j) {
        double* a = &acc[j * 8];
        for (int e = 0; e < 4; ++e) {
          a[2 * e] += vr[e] * pr - vi[e] * pi;
          a[2 * e + 1] += vr[e] * pi + vi[e] * pr;
        }
        const double nr = pr * sr - pi * si;
        pi = pr * si + pi * sr;
        pr = nr;
      }
    }
    for (std::size_t j = 0; j < nw; ++j) {
      const double* a = &acc[j * 8];
      Matrix2c s;
      s << Complex(a[0], a[1]), Complex(a[2], a[3]), Complex(a[4], a[5]), Complex(a[6], a[7]);
      s += cov.delta_coeff() * std::exp(Complex(0.0, -omega_grid[j] * t));
      out.at(i, j) = s * kInvSqrt2Pi;
    }
  }
  return out;
}

WignerSpectrumGrid grid_eval(const SpectrumFunction& fn, const UniformGrid& t_grid,
                             const UniformGrid& omega_grid) {
  WignerSpectrumGrid out{t_grid, omega_grid, {}, Provenance::closed_form};
  out.values.reserve(t_grid.size() * omega_grid.size());
  for (std::size_t i = 0; i < t_grid.size(); ++i)
    for (std::size_t j = 0; j < omega_grid.size(); ++j) out.values.push_back(fn(t_grid[i], omega_grid[j]));
  return out;
}

double max_abs_deviation(const WignerSpectrumGrid& a, const WignerSpectrumGrid& b,
                         std::optional<std::pair<int, int>> entry) {
  if (a.values.size() != b.values.size()) throw DomainError("spectrum grids differ in size");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.values.size(); ++k) {
    if (entry) {
      worst = std::max(worst, std::abs(a.values[k](entry->first, entry->second) -
                                       b.values[k](entry->first, entry->second)));
    } else {
      worst = std::max(worst, (a.values[k] - b.values[k]).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

double peak_magnitude(const WignerSpectrumGrid& grid, std::optional<std::pair<int, int>> entry) {
  double peak = 0.0;
  for (const Matrix2c& m : grid.values) {
    peak = std::max(peak, entry ? std::abs(m(entry->first, entry->second)) : m.cwiseAbs().maxCoeff());
  }
  return peak;
}

void write_spectrum_csv(std::ostream& out, const WignerSpectrumGrid& grid) {
  using detail::format_e12;
  out << "t,omega,entry,re,im\n";
  for (std::size_t i = 0; i < grid.t_grid.size(); ++i) {
    const std::string t = format_e12(grid.t_grid[i]);
    for (std::size_t j = 0; j < grid.omega_grid.size(); ++j) {
      const std::string w = format_e12(grid.omega_grid[j]);
      const Matrix2c& m = grid.at(i, j);
      for (std::size_t k = 0; k < 4; ++k) {
        const Complex v = m(static_cast<int>(k / 2), static_cast<int>(k % 2));
        out << t << ',' << w << ',' << entry_index(k) << ',' << format_e12(v.real()) << ','
            << format_e12(v.imag()) << '\n';
      }
    }
  }
}

void write_spectrum_json(std::ostream& out, const WignerSpectrumGrid& grid) {
  nlohmann::ordered_json doc;
  doc["provenance"] = grid.provenance == Provenance::closed_form ? "closed_form" : "numeric_oracle";
  auto grid_doc = [](const UniformGrid& g) {
    return nlohmann::ordered_json{{"start", g.start}, {"stop", g.stop}, {"count", g.count}};
  };
  doc["t"] = grid_doc(grid.t_grid);
  doc["omega"] = grid_doc(grid.omega_grid);
  for (std::size_t k = 0; k < 4; ++k) {
    const int row = static_cast<int>(k / 2), col = static_cast<int>(k % 2);
    nlohmann::ordered_json re = nlohmann::ordered_json::array();
    nlohmann::ordered_json im = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < grid.t_grid.size(); ++i) {
      std::vector<double> r, m;
      for (std::size_t j = 0; j < grid.omega_grid.size(); ++j) {
        r.push_back(grid.at(i, j)(row, col).real());
        m.push_back(grid.at(i, j)(row, col).imag());
      }
      re.push_back(r);
      im.push_back(m);
    }
    doc["entries"][std::to_string(entry_index(k))] = {{"re", re}, {"im", im}};
  }
  out << doc.dump() << '\n';
}

}  // namespace pw
