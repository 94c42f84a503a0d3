#include "pw/engines.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

#include "pw/errors.hpp"

namespace pw {

namespace {

using PC = PrintedCoefficient;

constexpr std::array kCoefficients{
    PC::cavity_s11_prefactor,     PC::cavity_s11_kappa_sq,       PC::cavity_s11_kappa_gamma,
    PC::cavity_s11_omega0_sq,     PC::cavity_s11_omega_omega0,   PC::cavity_s11_gamma_omega0,
    PC::cavity_s11_omega_kappa,   PC::cavity_s11_omega_gamma,    PC::cavity_s11_den_gamma,
    PC::cavity_s11_den_omega,     PC::cavity_s11_den_mid_kappa,  PC::cavity_s11_den_mid_omega0,
    PC::cavity_s11_den_mid_gamma, PC::cavity_s11_den_last_kappa, PC::cavity_s11_den_last_omega0,
    PC::cavity_s11_den_last_omega,
    PC::cavity_s22_prefactor,     PC::cavity_s22_kappa_sq,       PC::cavity_s22_kappa_gamma,
    PC::cavity_s22_omega0_sq,     PC::cavity_s22_omega_omega0,   PC::cavity_s22_gamma_omega0,
    PC::cavity_s22_omega_kappa,   PC::cavity_s22_omega_gamma,    PC::cavity_s22_den_gamma,
    PC::cavity_s22_den_omega,     PC::cavity_s22_den_mid_kappa,  PC::cavity_s22_den_mid_omega0,
    PC::cavity_s22_den_mid_gamma, PC::cavity_s22_den_last_kappa, PC::cavity_s22_den_last_omega0,
    PC::cavity_s22_den_last_omega,
    PC::xi_minus_a,               PC::xi_minus_b,                PC::xi_minus_c,
    PC::xi_plus_a,                PC::xi_plus_b,                 PC::xi_plus_c,
    PC::chi11_fast,               PC::chi11_slow,                PC::chi12_fast,
    PC::chi12_slow,               PC::chi22_fast,                PC::chi22_slow,
    PC::s_out11_fast_minus,       PC::s_out11_slow_minus,        PC::s_out11_fast_plus,
    PC::s_out11_slow_plus,        PC::s_out11_delta,             PC::s_out11_minus_a,
    PC::s_out11_minus_b,          PC::s_out11_minus_c,           PC::s_out11_plus_a,
    PC::s_out11_plus_b,           PC::s_out11_plus_c,
    PC::s_out12_fast_minus,       PC::s_out12_slow_minus,        PC::s_out12_fast_plus,
    PC::s_out12_slow_plus,        PC::s_out12_minus_a,           PC::s_out12_minus_b,
    PC::s_out12_minus_c,          PC::s_out12_plus_a,            PC::s_out12_plus_b,
    PC::s_out12_plus_c,
};

constexpr std::array<std::string_view, kCoefficients.size()> kNames{
    "cavity_s11_prefactor",     "cavity_s11_kappa_sq",       "cavity_s11_kappa_gamma",
    "cavity_s11_omega0_sq",     "cavity_s11_omega_omega0",   "cavity_s11_gamma_omega0",
    "cavity_s11_omega_kappa",   "cavity_s11_omega_gamma",    "cavity_s11_den_gamma",
    "cavity_s11_den_omega",     "cavity_s11_den_mid_kappa",  "cavity_s11_den_mid_omega0",
    "cavity_s11_den_mid_gamma", "cavity_s11_den_last_kappa", "cavity_s11_den_last_omega0",
    "cavity_s11_den_last_omega",
    "cavity_s22_prefactor",     "cavity_s22_kappa_sq",       "cavity_s22_kappa_gamma",
    "cavity_s22_omega0_sq",     "cavity_s22_omega_omega0",   "cavity_s22_gamma_omega0",
    "cavity_s22_omega_kappa",   "cavity_s22_omega_gamma",    "cavity_s22_den_gamma",
    "cavity_s22_den_omega",     "cavity_s22_den_mid_kappa",  "cavity_s22_den_mid_omega0",
    "cavity_s22_den_mid_gamma", "cavity_s22_den_last_kappa", "cavity_s22_den_last_omega0",
    "cavity_s22_den_last_omega",
    "xi_minus_a",               "xi_minus_b",                "xi_minus_c",
    "xi_plus_a",                "xi_plus_b",                 "xi_plus_c",
    "chi11_fast",               "chi11_slow",                "chi12_fast",
    "chi12_slow",               "chi22_fast",                "chi22_slow",
    "s_out11_fast_minus",       "s_out11_slow_minus",        "s_out11_fast_plus",
    "s_out11_slow_plus",        "s_out11_delta",             "s_out11_minus_a",
    "s_out11_minus_b",          "s_out11_minus_c",           "s_out11_plus_a",
    "s_out11_plus_b",           "s_out11_plus_c",
    "s_out12_fast_minus",       "s_out12_slow_minus",        "s_out12_fast_plus",
    "s_out12_slow_plus",        "s_out12_minus_a",           "s_out12_minus_b",
    "s_out12_minus_c",          "s_out12_plus_a",            "s_out12_plus_b",
    "s_out12_plus_c",
};

void require_damping(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw DomainError("input damping rate must satisfy gamma > 0");
}

// Collapses terms with identical rate and power.
TemporalPulse merged(const TemporalPulse& p) {
  std::vector<ExpTerm> out;
  for (const ExpTerm& term : p.terms()) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const ExpTerm& e) { return e.rate == term.rate && e.power == term.power; });
    if (it == out.end()) {
      out.push_back(term);
    } else {
      it->amplitude += term.amplitude;
    }
  }
  return TemporalPulse(std::move(out));
}

struct DpaRates {
  double fast;  // (kappa + eps)/2
  double slow;  // (kappa - eps)/2
  double d1;    // kappa + eps - 2 gamma
  double d2;    // eps - kappa + 2 gamma
};

DpaRates dpa_rates(const DpaModel& m, double gamma) {
  return {0.5 * (m.kappa + m.epsilon), 0.5 * (m.kappa - m.epsilon), m.kappa + m.epsilon - 2.0 * gamma,
          m.epsilon - m.kappa + 2.0 * gamma};
}

bool dpa_confluent(const DpaRates& r) {
  return std::abs(r.d1) < kConfluentTolerance || std::abs(r.d2) < kConfluentTolerance;
}

// nu e1 - (kappa e^{A t} e1) * nu, expanded term-wise.
PulsePair dpa_pulses_by_convolution(const DpaModel& m, double gamma) {
  const TemporalPulse nu = make_exp_pulse(gamma);
  const DpaRates r = dpa_rates(m, gamma);
  const double h = 0.5 * m.kappa;
  const std::vector<ExpTerm> k_minus{{-h, r.fast, 0}, {-h, r.slow, 0}};
  const std::vector<ExpTerm> k_plus{{h, r.fast, 0}, {-h, r.slow, 0}};
  return {merged(nu + convolve(nu, k_minus)), merged(convolve(nu, k_plus))};
}

TwoTimeCovariance delta_product(const Matrix2c& delta, const PulsePair& p, std::vector<StationaryExpTerm> chi) {
  const TemporalPulse& a = p.minus;
  const TemporalPulse& b = p.plus;
  const TemporalPulse ac = a.conj(), bc = b.conj();
  std::vector<SeparableTerm> sep{
      {0, 0, a, ac},  {0, 0, bc, b},  {0, 1, a, bc}, {0, 1, bc, a},
      {1, 0, b, ac},  {1, 0, ac, b},  {1, 1, b, bc}, {1, 1, ac, a},
  };
  std::erase_if(sep, [](const SeparableTerm& s) { return s.f.is_zero() || s.h.is_zero(); });
  return TwoTimeCovariance(delta, std::move(sep), std::move(chi));
}

Matrix2c vacuum_delta() {
  Matrix2c d = Matrix2c::Zero();
  d(0, 0) = 1.0;
  return d;
}

}  // namespace

std::span<const PrintedCoefficient> printed_coefficients() { return kCoefficients; }

std::string_view coefficient_name(PrintedCoefficient c) {
  if (c == PC::none) return "none";
  for (std::size_t i = 0; i < kCoefficients.size(); ++i)
    if (kCoefficients[i] == c) return kNames[i];
  return "unknown";
}

TemporalPulse cavity_output_pulse(const CavityModel& m, const TemporalPulse& input) {
  m.validate();
  if (m.kappa == 0.0) return input;
  const ImpulseResponse g = cavity_impulse_response(m);
  if (input.is_analytic()) return merged(input + convolve(input, g.terms));
  const auto& s = *input.samples();
  const UniformGrid grid{s.start, s.stop(), s.values.size()};
  return network_output_pulse(cavity_transfer(m), to_frequency(input), grid);
}

TwoTimeCovariance cavity_output_covariance(const CavityModel& m, double gamma) {
  require_damping(gamma);
  return single_photon_covariance(cavity_output_pulse(m, make_exp_pulse(gamma)));
}

SpectrumFunction cavity_output_wigner(const CavityModel& m, double gamma, PrintedCoefficient flip) {
  m.validate();
  require_damping(gamma);
  const TemporalPulse eta = cavity_output_pulse(m, make_exp_pulse(gamma));
  const Complex mid{0.5 * m.kappa - gamma, -m.omega0};
  if (m.kappa == 0.0 || std::abs(mid) < kConfluentTolerance) {
    return wigner_closed_form(single_photon_covariance(eta));
  }
  auto sg = [flip](PC c) { return flip == c ? -1.0 : 1.0; };
  const double k = m.kappa, w0 = m.omega0, g = gamma;
  const double root = std::sqrt(2.0 * gamma);

  // sign pattern of omega0 differs between the two entries: s = +1 for S11, -1 for S22
  struct Entry {
    double pref, kk, kg, w0sq, ww0, gw0, wk, wg, dg, dw, mk, mw0, mg, lk, lw0, lw;
  };
  const Entry e11{sg(PC::cavity_s11_prefactor),     sg(PC::cavity_s11_kappa_sq),      sg(PC::cavity_s11_kappa_gamma),
                  sg(PC::cavity_s11_omega0_sq),     sg(PC::cavity_s11_omega_omega0),  sg(PC::cavity_s11_gamma_omega0),
                  sg(PC::cavity_s11_omega_kappa),   sg(PC::cavity_s11_omega_gamma),   sg(PC::cavity_s11_den_gamma),
                  sg(PC::cavity_s11_den_omega),     sg(PC::cavity_s11_den_mid_kappa), sg(PC::cavity_s11_den_mid_omega0),
                  sg(PC::cavity_s11_den_mid_gamma), sg(PC::cavity_s11_den_last_kappa), sg(PC::cavity_s11_den_last_omega0),
                  sg(PC::cavity_s11_den_last_omega)};
  const Entry e22{sg(PC::cavity_s22_prefactor),     sg(PC::cavity_s22_kappa_sq),      sg(PC::cavity_s22_kappa_gamma),
                  sg(PC::cavity_s22_omega0_sq),     sg(PC::cavity_s22_omega_omega0),  sg(PC::cavity_s22_gamma_omega0),
                  sg(PC::cavity_s22_omega_kappa),   sg(PC::cavity_s22_omega_gamma),   sg(PC::cavity_s22_den_gamma),
                  sg(PC::cavity_s22_den_omega),     sg(PC::cavity_s22_den_mid_kappa), sg(PC::cavity_s22_den_mid_omega0),
                  sg(PC::cavity_s22_den_mid_gamma), sg(PC::cavity_s22_den_last_kappa), sg(PC::cavity_s22_den_last_omega0),
                  sg(PC::cavity_s22_den_last_omega)};

  auto printed = [=](const Entry& e, double s, double w) {
    const Complex num{e.kk * (-0.25 * k * k) + e.kg * (0.5 * k * g) + e.w0sq * (-w0 * w0) + e.ww0 * (s * w * w0),
                      e.gw0 * (s * g * w0) + e.wk * (0.5 * w * k) + e.wg * (-w * g)};
    const Complex d1{e.dg * g, e.dw * w};
    const Complex d2{e.mk * 0.5 * k + e.mg * (-g), e.mw0 * (-s * w0)};
    const Complex d3{e.lk * 0.5 * k, e.lw0 * (-s * w0) + e.lw * w};
    return e.pref * root * num / (d1 * d2 * d3);
  };

  return [eta, printed, e11, e22](double t, double omega) {
    const Complex phase = std::exp(Complex(0.0, -omega * t));
    const Complex et = eta(t);
    Matrix2c s = Matrix2c::Zero();
    s(0, 0) = phase + et * printed(e11, 1.0, omega);
    s(1, 1) = std::conj(et) * printed(e22, -1.0, omega);
    return Matrix2c(s * kInvSqrt2Pi);
  };
}

OutputPhotonResult cavity_output(const CavityModel& m, double gamma) {
  require_damping(gamma);
  const TemporalPulse eta = cavity_output_pulse(m, make_exp_pulse(gamma));
  char buf[128];
  std::snprintf(buf, sizeof buf, "cavity kappa=%g omega0=%g gamma=%g", m.kappa, m.omega0, gamma);
  return {eta, std::nullopt, single_photon_covariance(eta), buf};
}

PulsePair dpa_output_pulses(const DpaModel& m, double gamma, PrintedCoefficient flip) {
  require_stable(m);
  require_damping(gamma);
  const DpaRates r = dpa_rates(m, gamma);
  if (dpa_confluent(r)) return dpa_pulses_by_convolution(m, gamma);
  auto sg = [flip](PC c) { return flip == c ? -1.0 : 1.0; };
  const double k = m.kappa, e = m.epsilon;
  const double root = std::sqrt(2.0 * gamma);
  const double dd = r.d1 * r.d2;
  const TemporalPulse minus({
      {sg(PC::xi_minus_a) * (e * e + k * k - 4.0 * gamma * gamma) * root / dd, gamma, 0},
      {sg(PC::xi_minus_b) * k * root / r.d1, r.fast, 0},
      {sg(PC::xi_minus_c) * -k * root / r.d2, r.slow, 0},
  });
  const TemporalPulse plus({
      {sg(PC::xi_plus_a) * 2.0 * k * e * root / dd, gamma, 0},
      {sg(PC::xi_plus_b) * -k * root / r.d1, r.fast, 0},
      {sg(PC::xi_plus_c) * -k * root / r.d2, r.slow, 0},
  });
  return {minus, plus};
}

TwoTimeCovariance dpa_gaussian_part(const DpaModel& m, PrintedCoefficient flip) {
  require_stable(m);
  auto sg = [flip](PC c) { return flip == c ? -1.0 : 1.0; };
  const double k = m.kappa, e = m.epsilon;
  const double fast = 0.5 * (k + e), slow = 0.5 * (k - e);
  const double af = k * e / (4.0 * (k + e));
  const double as = k * e / (4.0 * (k - e));
  auto term = [](int row, int col, double amp, double rate) {
    return StationaryExpTerm{row, col, amp, amp, rate};
  };
  std::vector<StationaryExpTerm> chi{
      term(0, 0, sg(PC::chi11_fast) * -af, fast), term(0, 0, sg(PC::chi11_slow) * as, slow),
      term(0, 1, sg(PC::chi12_fast) * af, fast),  term(0, 1, sg(PC::chi12_slow) * as, slow),
      term(1, 0, sg(PC::chi12_fast) * af, fast),  term(1, 0, sg(PC::chi12_slow) * as, slow),
      term(1, 1, sg(PC::chi22_fast) * -af, fast), term(1, 1, sg(PC::chi22_slow) * as, slow),
  };
  return TwoTimeCovariance(Matrix2c::Zero(), {}, std::move(chi));
}

TwoTimeCovariance dpa_output_covariance(const DpaModel& m, double gamma, PrintedCoefficient flip) {
  const PulsePair p = dpa_output_pulses(m, gamma, flip);
  return delta_product(vacuum_delta(), p, dpa_gaussian_part(m, flip).stationary());
}

SpectrumFunction dpa_output_wigner(const DpaModel& m, double gamma, PrintedCoefficient flip) {
  require_stable(m);
  require_damping(gamma);
  const DpaRates r = dpa_rates(m, gamma);
  if (dpa_confluent(r)) return wigner_closed_form(dpa_output_covariance(m, gamma));
  const PulsePair p = dpa_output_pulses(m, gamma, flip);
  auto sg = [flip](PC c) { return flip == c ? -1.0 : 1.0; };
  const double k = m.kappa, e = m.epsilon, g = gamma;
  const double root = std::sqrt(2.0 * gamma);
  const double af = k * e / (4.0 * (k + e));
  const double as = k * e / (4.0 * (k - e));
  const double dd = (e + k - 2.0 * g) * (e - k + 2.0 * g);
  const double big_a = (e * e + k * k - 4.0 * g * g) * root / dd;
  const double big_a2 = 2.0 * k * e * root / dd;
  const double big_b = k * root / (k + e - 2.0 * g);
  const double big_c = k * root / (k - e - 2.0 * g);
  const double fast = r.fast, slow = r.slow;

  struct Coeffs {
    double st[4];   // stationary: fast -iw, slow -iw, fast +iw, slow +iw
    double delta;
    double minus[3];
    double plus[3];
  };
  const Coeffs c11{{sg(PC::s_out11_fast_minus) * -af, sg(PC::s_out11_slow_minus) * as,
                    sg(PC::s_out11_fast_plus) * -af, sg(PC::s_out11_slow_plus) * as},
                   sg(PC::s_out11_delta),
                   {sg(PC::s_out11_minus_a) * big_a, sg(PC::s_out11_minus_b) * big_b, sg(PC::s_out11_minus_c) * big_c},
                   {sg(PC::s_out11_plus_a) * big_a2, sg(PC::s_out11_plus_b) * -big_b, sg(PC::s_out11_plus_c) * big_c}};
  const Coeffs c12{{sg(PC::s_out12_fast_minus) * af, sg(PC::s_out12_slow_minus) * as,
                    sg(PC::s_out12_fast_plus) * af, sg(PC::s_out12_slow_plus) * as},
                   0.0,
                   {sg(PC::s_out12_minus_a) * big_a2, sg(PC::s_out12_minus_b) * -big_b, sg(PC::s_out12_minus_c) * big_c},
                   {sg(PC::s_out12_plus_a) * big_a, sg(PC::s_out12_plus_b) * big_b, sg(PC::s_out12_plus_c) * big_c}};

  return [p, c11, c12, g, fast, slow](double t, double omega) {
    const Complex iw{0.0, omega};
    const Complex phase = std::exp(Complex(0.0, -omega * t));
    const Complex xm = p.minus(t), xp = p.plus(t);
    auto entry = [&](const Coeffs& c) {
      const Complex stationary = c.st[0] / (fast - iw) + c.st[1] / (slow - iw) + c.st[2] / (fast + iw) +
                                 c.st[3] / (slow + iw) + c.delta;
      const Complex bm = c.minus[0] / (g + iw) + c.minus[1] / (fast + iw) + c.minus[2] / (slow + iw);
      const Complex bp = c.plus[0] / (g + iw) + c.plus[1] / (fast + iw) + c.plus[2] / (slow + iw);
      return kInvSqrt2Pi * (stationary * phase + xm * bm + xp * bp);
    };
    const Complex s11 = entry(c11);
    const Complex s12 = entry(c12);
    Matrix2c s;
    s << s11, s12, s12, s11 - kInvSqrt2Pi * phase;
    return s;
  };
}

OutputPhotonResult dpa_output(const DpaModel& m, double gamma) {
  const PulsePair p = dpa_output_pulses(m, gamma);
  char buf[128];
  std::snprintf(buf, sizeof buf, "dpa kappa=%g epsilon=%g gamma=%g", m.kappa, m.epsilon, gamma);
  return {p.minus, p, dpa_output_covariance(m, gamma), buf};
}

TemporalPulse network_output_pulse(const Rational& multiplier, const SpectralPulse& input, const UniformGrid& grid,
                                   const InverseOptions& options) {
  if (!input.is_analytic()) {
    return to_time(input.multiplied([&](double w) { return multiplier(w); }), grid, options);
  }
  return to_time(input.multiplied(multiplier), grid, options);
}

SpectrumFunction network_output_wigner(const Rational& multiplier, const SpectralPulse& input,
                                      const UniformGrid& pulse_grid) {
  if (!input.is_analytic()) throw NotAnalyticError("network spectrum needs an analytic input spectrum");
  const SpectralPulse spectrum = input.multiplied(multiplier);
  const TemporalPulse eta = to_time(spectrum, pulse_grid);
  return [spectrum, eta](double t, double omega) {
    const Complex e = eta(t);
    Matrix2c out = Matrix2c::Zero();
    out(0, 0) = std::exp(Complex(0.0, -omega * t)) + e * std::conj(spectrum(-omega));
    out(1, 1) = std::conj(e) * spectrum(omega);
    return Matrix2c(out * kInvSqrt2Pi);
  };
}

std::vector<double> detection_probability(const TemporalPulse& pulse, const UniformGrid& grid) {
  std::vector<double> out;
  out.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out.push_back(std::norm(pulse(grid[i])));
  return out;
}

}  // namespace pw
