#include "pw/pulses.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "detail/numerics.hpp"
#include "pw/errors.hpp"

namespace pw {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

// Coefficients c_k of 1/(x+a)^k, k = 1..m, in the expansion of 1/((x+a)^m (x+b)^n).
std::vector<Complex> partial_fraction(Complex a, Complex b, int m, int n) {
  std::vector<Complex> c(static_cast<std::size_t>(m));
  for (int k = 1; k <= m; ++k) {
    const double sign = ((m - k) % 2 == 0) ? 1.0 : -1.0;
    c[static_cast<std::size_t>(k - 1)] = sign * binomial(n + m - k - 1, m - k) / std::pow(b - a, n + m - k);
  }
  return c;
}

// Catmull-Rom interpolation on a uniform grid; ends are clamped.
template <class Values>
Complex cubic_interpolate(const Values& v, double x) {
  const auto n = static_cast<std::ptrdiff_t>(v.size());
  if (n == 0) return {0.0, 0.0};
  if (n == 1) return x == 0.0 ? v[0] : Complex{0.0, 0.0};
  if (x < 0.0 || x > static_cast<double>(n - 1)) return {0.0, 0.0};
  auto i = static_cast<std::ptrdiff_t>(std::floor(x));
  if (i >= n - 1) i = n - 2;
  const double u = x - static_cast<double>(i);
  if (u == 0.0) return v[static_cast<std::size_t>(i)];
  auto at = [&](std::ptrdiff_t k) { return v[static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(k, 0, n - 1))]; };
  const Complex p0 = at(i - 1), p1 = at(i), p2 = at(i + 1), p3 = at(i + 2);
  return p1 + 0.5 * u *
                  (p2 - p0 + u * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3 + u * (3.0 * (p1 - p2) + p3 - p0)));
}

UniformGrid common_grid(const TemporalPulse& p, const TemporalPulse& q) {
  double step = std::numeric_limits<double>::infinity();
  double lo = 0.0;
  double hi = 0.0;
  for (const TemporalPulse* x : {&p, &q}) {
    if (x->samples() && !x->is_analytic()) {
      step = std::min(step, x->samples()->step);
      lo = std::min(lo, x->samples()->start);
      hi = std::max(hi, x->samples()->stop());
    } else {
      hi = std::max(hi, x->support_end());
    }
  }
  if (!std::isfinite(step) || step <= 0.0) step = 1e-3;
  const auto count = static_cast<std::size_t>(std::ceil((hi - lo) / step)) + 1;
  return UniformGrid{lo, lo + step * static_cast<double>(count - 1), count};
}

Complex trapezoid(const UniformGrid& grid, const auto& f) {
  if (grid.count < 2) return {0.0, 0.0};
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < grid.count; ++i) {
    const double w = (i == 0 || i + 1 == grid.count) ? 0.5 : 1.0;
    acc += w * f(grid[i]);
  }
  return acc * grid.step();
}

}  // namespace

Complex ExpTerm::operator()(double t) const {
  if (t < 0.0) return {0.0, 0.0};
  Complex v = amplitude * std::exp(-rate * t);
  if (power > 0) v *= std::pow(t, power);
  return v;
}

Complex SampledSignal::operator()(double t) const {
  if (values.empty()) return {0.0, 0.0};
  if (step <= 0.0) return t == start ? values.front() : Complex{0.0, 0.0};
  return cubic_interpolate(values, (t - start) / step);
}

TemporalPulse::TemporalPulse(std::vector<ExpTerm> terms) : terms_(std::move(terms)) {
  for (const ExpTerm& term : terms_) {
    if (!(term.rate.real() > 0.0) || !std::isfinite(term.rate.imag())) {
      throw DomainError("exponential term is not integrable on [0, inf): Re(rate) must be > 0");
    }
    if (term.power < 0) throw DomainError("exponential term power must be non-negative");
    if (!std::isfinite(std::abs(term.amplitude))) throw DomainError("non-finite term amplitude");
  }
}

TemporalPulse TemporalPulse::from_samples(SampledSignal samples) {
  if (samples.values.size() > 1 && !(samples.step > 0.0)) {
    throw DomainError("sampled pulse needs a positive step");
  }
  TemporalPulse p;
  p.samples_ = std::move(samples);
  p.analytic_ = false;
  return p;
}

Complex TemporalPulse::operator()(double t) const {
  if (!analytic_) return (*samples_)(t);
  Complex acc{0.0, 0.0};
  for (const ExpTerm& term : terms_) acc += term(t);
  return acc;
}

TemporalPulse TemporalPulse::conj() const {
  if (!analytic_) {
    SampledSignal s = *samples_;
    for (Complex& v : s.values) v = std::conj(v);
    return from_samples(std::move(s));
  }
  std::vector<ExpTerm> out = terms_;
  for (ExpTerm& term : out) {
    term.amplitude = std::conj(term.amplitude);
    term.rate = std::conj(term.rate);
  }
  return TemporalPulse(std::move(out));
}

TemporalPulse TemporalPulse::scaled(Complex c) const {
  if (!analytic_) {
    SampledSignal s = *samples_;
    for (Complex& v : s.values) v *= c;
    return from_samples(std::move(s));
  }
  std::vector<ExpTerm> out = terms_;
  for (ExpTerm& term : out) term.amplitude *= c;
  return TemporalPulse(std::move(out));
}

std::vector<ExpTerm> convolve(const ExpTerm& a, const ExpTerm& b) {
  const int m = a.power + 1;
  const int n = b.power + 1;
  const Complex scale = a.amplitude * b.amplitude * factorial(a.power) * factorial(b.power);
  if (std::abs(a.rate - b.rate) < kConfluentTolerance) {
    const int p = m + n - 1;
    return {ExpTerm{scale / factorial(p), a.rate, p}};
  }
  std::vector<ExpTerm> out;
  const auto ca = partial_fraction(a.rate, b.rate, m, n);
  for (int k = 1; k <= m; ++k)
    out.push_back(ExpTerm{scale * ca[static_cast<std::size_t>(k - 1)] / factorial(k - 1), a.rate, k - 1});
  const auto cb = partial_fraction(b.rate, a.rate, n, m);
  for (int k = 1; k <= n; ++k)
    out.push_back(ExpTerm{scale * cb[static_cast<std::size_t>(k - 1)] / factorial(k - 1), b.rate, k - 1});
  return out;
}

TemporalPulse convolve(const TemporalPulse& p, const std::vector<ExpTerm>& kernel) {
  if (!p.is_analytic()) throw NotAnalyticError("term-wise convolution needs an analytic pulse");
  std::vector<ExpTerm> out;
  for (const ExpTerm& a : p.terms())
    for (const ExpTerm& b : kernel) {
      auto terms = convolve(a, b);
      out.insert(out.end(), terms.begin(), terms.end());
    }
  return TemporalPulse(std::move(out));
}

SampledSignal TemporalPulse::sample(const UniformGrid& grid) const {
  SampledSignal s;
  s.start = grid.start;
  s.step = grid.step();
  s.values.reserve(grid.count);
  for (std::size_t i = 0; i < grid.count; ++i) s.values.push_back((*this)(grid[i]));
  return s;
}

TemporalPulse TemporalPulse::with_samples(const UniformGrid& grid, double tolerance) const {
  if (!analytic_) return from_samples(sample(grid));
  TemporalPulse out = *this;
  out.samples_ = sample(grid);
  for (std::size_t i = 0; i < grid.count; ++i) {
    if (std::abs(out.samples_->values[i] - (*this)(grid[i])) > tolerance) {
      throw DomainError("attached samples disagree with the analytic terms");
    }
  }
  return out;
}

double TemporalPulse::slowest_rate() const {
  double r = std::numeric_limits<double>::infinity();
  for (const ExpTerm& term : terms_) r = std::min(r, term.rate.real());
  return r;
}

double TemporalPulse::support_end() const {
  if (!analytic_) return samples_->stop();
  if (terms_.empty()) return 0.0;
  return 20.0 / slowest_rate();
}

TemporalPulse operator+(const TemporalPulse& a, const TemporalPulse& b) {
  if (a.analytic_ && b.analytic_) {
    std::vector<ExpTerm> terms = a.terms_;
    terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
    return TemporalPulse(std::move(terms));
  }
  const UniformGrid grid = common_grid(a, b);
  SampledSignal s;
  s.start = grid.start;
  s.step = grid.step();
  for (std::size_t i = 0; i < grid.count; ++i) s.values.push_back(a(grid[i]) + b(grid[i]));
  return TemporalPulse::from_samples(std::move(s));
}

TemporalPulse operator-(const TemporalPulse& a, const TemporalPulse& b) { return a + b.scaled(-1.0); }

Complex SpectralSamples::operator()(double omega) const {
  if (values.empty() || omega_step <= 0.0) return {0.0, 0.0};
  return cubic_interpolate(values, omega / omega_step + static_cast<double>(values.size() / 2));
}

SpectralPulse SpectralPulse::from_samples(SpectralSamples samples) {
  SpectralPulse s;
  s.samples_ = std::move(samples);
  s.analytic_ = false;
  return s;
}

Complex SpectralPulse::operator()(double omega) const {
  if (!analytic_) return (*samples_)(omega);
  Complex acc{0.0, 0.0};
  for (const Rational& term : terms_) acc += term(omega);
  return acc;
}

SpectralPulse SpectralPulse::multiplied(const Rational& multiplier) const {
  if (!analytic_) {
    return multiplied(std::function<Complex(double)>([&](double w) { return multiplier(w); }));
  }
  std::vector<Rational> out;
  out.reserve(terms_.size());
  for (const Rational& term : terms_) out.push_back(term * multiplier);
  return SpectralPulse(std::move(out));
}

SpectralPulse SpectralPulse::multiplied(const std::function<Complex(double)>& multiplier) const {
  if (analytic_) {
    throw DomainError("an analytic spectrum can only be multiplied by a rational multiplier");
  }
  SpectralSamples s = *samples_;
  for (std::size_t k = 0; k < s.values.size(); ++k) s.values[k] *= multiplier(s.omega(k));
  return from_samples(std::move(s));
}

std::vector<Complex> SpectralPulse::pole_rates() const {
  std::vector<Complex> out;
  for (const Rational& term : terms_) {
    for (const Complex& z : term.poles()) out.push_back(-kI * z);
  }
  return out;
}

TemporalPulse make_exp_pulse(double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw DomainError("exponential pulse needs rate > 0");
  }
  return TemporalPulse({ExpTerm{std::sqrt(2.0 * rate), rate, 0}});
}

SpectralPulse to_frequency(const TemporalPulse& pulse) {
  if (pulse.is_analytic()) {
    std::vector<Rational> terms;
    for (const ExpTerm& term : pulse.terms()) {
      if (!(term.rate.real() > 0.0)) throw DomainError("non-integrable term in to_frequency");
      terms.emplace_back(Polynomial::constant(term.amplitude * factorial(term.power)),
                         Polynomial::linear(term.rate, kI).pow(term.power + 1));
    }
    return SpectralPulse(std::move(terms));
  }

  const SampledSignal& s = *pulse.samples();
  const std::size_t n = s.values.size();
  if (n < 2) throw DomainError("sampled pulse needs at least two samples");
  const std::size_t big_n = std::max<std::size_t>(16, detail::next_pow2(4 * n));
  std::vector<Complex> buffer(big_n, Complex{0.0, 0.0});
  for (std::size_t j = 0; j < n; ++j) {
    const double w = (j == 0 || j + 1 == n) ? 0.5 : 1.0;
    // (-1)^j shifts the output so that index N/2 is omega = 0.
    buffer[j] = (j % 2 == 0 ? 1.0 : -1.0) * w * s.step * s.values[j];
  }
  detail::fft_inplace(buffer, -1);
  SpectralSamples out;
  out.omega_step = 2.0 * kPi / (static_cast<double>(big_n) * s.step);
  out.time_start = s.start;
  out.time_step = s.step;
  out.time_count = n;
  out.values = std::move(buffer);
  if (s.start != 0.0) {
    for (std::size_t k = 0; k < big_n; ++k) out.values[k] *= std::exp(-kI * out.omega(k) * s.start);
  }
  return SpectralPulse::from_samples(std::move(out));
}

namespace {

TemporalPulse to_time_sampled(const SpectralSamples& s, const UniformGrid& grid) {
  const std::size_t big_n = s.values.size();
  if (big_n == 0 || s.time_count < 2) throw DomainError("sampled spectrum carries no transform grid");
  std::vector<Complex> buffer = s.values;
  for (std::size_t k = 0; k < big_n; ++k) {
    if (s.time_start != 0.0) buffer[k] *= std::exp(kI * s.omega(k) * s.time_start);
  }
  detail::fft_inplace(buffer, +1);
  SampledSignal native;
  native.start = s.time_start;
  native.step = s.time_step;
  for (std::size_t j = 0; j < s.time_count; ++j) {
    const double w = (j == 0 || j + 1 == s.time_count) ? 0.5 : 1.0;
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    native.values.push_back(sign * buffer[j] / (static_cast<double>(big_n) * w * s.time_step));
  }
  SampledSignal out;
  out.start = grid.start;
  out.step = grid.step();
  for (std::size_t i = 0; i < grid.count; ++i) out.values.push_back(native(grid[i]));
  return TemporalPulse::from_samples(std::move(out));
}

}  // namespace

TemporalPulse to_time(const SpectralPulse& spectrum, const UniformGrid& grid,
                      const InverseOptions& options) {
  if (!spectrum.is_analytic()) return to_time_sampled(*spectrum.samples(), grid);

  std::vector<Rational> terms;
  for (const Rational& term : spectrum.terms()) {
    Rational r = term.simplified();
    if (r.numerator().is_zero()) continue;
    if (!r.strictly_proper()) {
      throw DomainError("spectrum decays slower than 1/omega; inverse transform undefined");
    }
    terms.push_back(std::move(r));
  }

  SampledSignal out;
  out.start = grid.start;
  out.step = grid.step();
  if (terms.empty()) {
    out.values.assign(grid.count, Complex{0.0, 0.0});
    return TemporalPulse::from_samples(std::move(out));
  }

  double decay = std::numeric_limits<double>::infinity();
  double causal_decay = std::numeric_limits<double>::infinity();
  double pole_scale = 0.0;
  for (const Rational& r : terms) {
    for (const Complex& z : r.poles()) {
      if (std::abs(z.imag()) < 1e-9) throw DomainError("spectrum has a pole on the real axis");
      decay = std::min(decay, std::abs(z.imag()));
      if (z.imag() > 0.0) causal_decay = std::min(causal_decay, z.imag());
      pole_scale = std::max(pole_scale, std::abs(z));
    }
  }
  const double lambda = std::isfinite(causal_decay) ? causal_decay : decay;

  // Subtract sum_k c_k t^{k-1} e^{-lambda t}/(k-1)! so the remainder decays as omega^-(K+1).
  constexpr int kOrders = 4;
  std::vector<Complex> d(kOrders, Complex{0.0, 0.0});
  for (const Rational& r : terms) {
    const auto dr = r.laurent_at_infinity(kOrders);
    for (int j = 0; j < kOrders; ++j) d[j] += dr[j];
  }
  // (i w + lambda)^{-k} = (-i)^k sum_m C(k+m-1, m) (i lambda)^m w^{-(k+m)}
  std::vector<Complex> c(kOrders, Complex{0.0, 0.0});
  auto minus_i_pow = [](int k) { return std::pow(Complex(0.0, -1.0), k); };
  for (int j = 1; j <= kOrders; ++j) {
    Complex acc = d[j - 1];
    for (int k = 1; k < j; ++k) {
      acc -= c[k - 1] * minus_i_pow(k) * std::tgamma(j) / (std::tgamma(k) * std::tgamma(j - k + 1)) *
             std::pow(kI * lambda, j - k);
    }
    c[j - 1] = acc / minus_i_pow(j);
  }
  auto full = [&](double w) {
    Complex acc{0.0, 0.0};
    for (const Rational& r : terms) acc += r(w);
    return acc;
  };
  auto remainder = [&](double w) {
    const Complex inv = 1.0 / (kI * w + lambda);
    Complex acc = full(w);
    Complex p = inv;
    for (int k = 0; k < kOrders; ++k, p *= inv) acc -= c[k] * p;
    return acc;
  };

  double peak = 0.0;
  const double scan = 20.0 * std::max(1.0, pole_scale);
  for (int k = -2000; k <= 2000; ++k) peak = std::max(peak, std::abs(full(scan * k / 2000.0)));

  auto tail = [&](double omega) {
    return (std::abs(remainder(omega)) + std::abs(remainder(-omega))) * omega / (2.0 * kPi * kOrders);
  };
  const double t_extent = std::max(std::abs(grid.start), std::abs(grid.stop)) + 40.0 / decay;
  const double period_min = 2.0 * t_extent;
  double omega_window = 64.0;
  while (omega_window < 4.0 * pole_scale) omega_window *= 2.0;
  while (tail(omega_window) > options.relative_tail * peak) {
    omega_window *= 2.0;
    if (period_min * omega_window / kPi > static_cast<double>(options.max_fft_size)) {
      throw DomainError("spectral tail does not decay fast enough for the FFT size limit");
    }
  }

  const double dt_max = kPi / omega_window;
  double dt = dt_max;
  bool aligned = false;
  std::ptrdiff_t first_index = 0;
  std::size_t stride = 1;
  if (grid.count >= 2) {
    stride = static_cast<std::size_t>(std::ceil(grid.step() / dt_max));
    dt = grid.step() / static_cast<double>(stride);
    const double s = grid.start / dt;
    if (std::abs(s - std::round(s)) < 1e-9) {
      aligned = true;
      first_index = static_cast<std::ptrdiff_t>(std::llround(s));
    }
  }
  const std::size_t big_n =
      detail::next_pow2(static_cast<std::size_t>(std::ceil(period_min / dt)));
  if (big_n > options.max_fft_size) {
    throw DomainError("inverse transform needs more samples than the FFT size limit");
  }
  const double period = dt * static_cast<double>(big_n);
  const double d_omega = 2.0 * kPi / period;

  std::vector<Complex> buffer(big_n);
  const auto half = static_cast<std::ptrdiff_t>(big_n / 2);
  for (std::ptrdiff_t k = -half; k < half; ++k) {
    const auto idx = static_cast<std::size_t>((k + static_cast<std::ptrdiff_t>(big_n)) %
                                              static_cast<std::ptrdiff_t>(big_n));
    buffer[idx] = remainder(static_cast<double>(k) * d_omega);
  }
  detail::fft_inplace(buffer, +1);
  for (Complex& v : buffer) v *= d_omega / (2.0 * kPi);

  auto pair = [&](double t) {
    if (t < 0.0) return Complex{0.0, 0.0};
    Complex acc{0.0, 0.0};
    double power = 1.0;
    for (int k = 0; k < kOrders; ++k) {
      acc += c[k] * power;
      power *= t / (k + 1);
    }
    return acc * std::exp(-lambda * t);
  };
  auto wrap = [&](std::ptrdiff_t j) {
    const auto n = static_cast<std::ptrdiff_t>(big_n);
    return buffer[static_cast<std::size_t>(((j % n) + n) % n)];
  };

  if (aligned) {
    for (std::size_t i = 0; i < grid.count; ++i) {
      const std::ptrdiff_t j = first_index + static_cast<std::ptrdiff_t>(i * stride);
      out.values.push_back(pair(grid[i]) + wrap(j));
    }
  } else {
    SampledSignal residual;
    residual.start = -static_cast<double>(half) * dt;
    residual.step = dt;
    residual.values.reserve(big_n);
    for (std::ptrdiff_t j = -half; j < half; ++j) residual.values.push_back(wrap(j));
    for (std::size_t i = 0; i < grid.count; ++i) out.values.push_back(pair(grid[i]) + residual(grid[i]));
  }
  out.truncation = TruncationInfo{omega_window, period, tail(omega_window), big_n};
  return TemporalPulse::from_samples(std::move(out));
}

UniformGrid default_time_grid(const SpectralPulse& spectrum, std::size_t count) {
  double slowest = std::numeric_limits<double>::infinity();
  for (const Complex& r : spectrum.pole_rates()) {
    if (r.real() > 0.0) slowest = std::min(slowest, r.real());
  }
  if (!std::isfinite(slowest)) slowest = 1.0;
  return UniformGrid::linspace(0.0, 20.0 / slowest, count);
}

Complex inner_product(const TemporalPulse& p, const TemporalPulse& q) {
  if (p.is_analytic() && q.is_analytic()) {
    Complex acc{0.0, 0.0};
    for (const ExpTerm& a : p.terms()) {
      for (const ExpTerm& b : q.terms()) {
        const int n = a.power + b.power;
        const Complex s = std::conj(a.rate) + b.rate;
        acc += std::conj(a.amplitude) * b.amplitude * factorial(n) / std::pow(s, n + 1);
      }
    }
    return acc;
  }
  const UniformGrid grid = common_grid(p, q);
  return trapezoid(grid, [&](double t) { return std::conj(p(t)) * q(t); });
}

double norm(const TemporalPulse& p) { return std::sqrt(std::max(0.0, inner_product(p, p).real())); }

double l2_distance(const TemporalPulse& p, const TemporalPulse& q) { return norm(p - q); }

Complex spectral_inner_product(const SpectralPulse& a, const SpectralPulse& b) {
  if (!a.is_analytic() || !b.is_analytic()) {
    const SpectralPulse& s = a.is_analytic() ? b : a;
    const SpectralSamples& grid = *s.samples();
    Complex acc{0.0, 0.0};
    for (std::size_t k = 0; k < grid.values.size(); ++k) {
      const double w = grid.omega(k);
      acc += std::conj(a(w)) * b(w);
    }
    return acc * grid.omega_step / (2.0 * kPi);
  }
  // omega = scale * tan(theta) maps the real line onto (-pi/2, pi/2).
  double scale = 1.0;
  for (const SpectralPulse* s : {&a, &b}) {
    for (const Complex& r : s->pole_rates()) scale = std::max(scale, std::abs(r));
  }
  std::vector<double> nodes, weights;
  detail::append_panels(-kPi / 2, kPi / 2, 2000, detail::gauss16(), nodes, weights);
  Complex acc{0.0, 0.0};
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const double c = std::cos(nodes[k]);
    const double w = scale * std::tan(nodes[k]);
    acc += weights[k] * scale / (c * c) * std::conj(a(w)) * b(w);
  }
  return acc / (2.0 * kPi);
}

void write_pulse_csv(std::ostream& out, const SampledSignal& samples) {
  out << "t,re,im\n";
  for (std::size_t i = 0; i < samples.values.size(); ++i) {
    out << detail::format_e12(samples.time(i)) << ',' << detail::format_e12(samples.values[i].real())
        << ',' << detail::format_e12(samples.values[i].imag()) << '\n';
  }
}

UniformGrid UniformGrid::linspace(double start, double stop, std::size_t count) {
  if (!std::isfinite(start) || !std::isfinite(stop)) throw DomainError("grid bounds must be finite");
  if (count > 1 && !(stop > start)) throw DomainError("grid must be strictly increasing");
  return UniformGrid{start, count > 1 ? stop : start, count};
}

}  // namespace pw
