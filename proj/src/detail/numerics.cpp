#include "detail/numerics.hpp"

#include <cstdio>
#include <mutex>

#include <boost/math/quadrature/gauss.hpp>
#include <fftw3.h>

namespace pw::detail {

namespace {

template <unsigned N>
GaussRule make_rule() {
  using Gauss = boost::math::quadrature::gauss<double, N>;
  const auto& x = Gauss::abscissa();
  const auto& w = Gauss::weights();
  GaussRule rule;
  // Boost stores the non-negative half; N even means x[0] > 0.
  for (std::size_t i = x.size(); i-- > 0;) {
    rule.nodes.push_back(-x[i]);
    rule.weights.push_back(w[i]);
  }
  for (std::size_t i = (N % 2 == 0) ? 0 : 1; i < x.size(); ++i) {
    rule.nodes.push_back(x[i]);
    rule.weights.push_back(w[i]);
  }
  return rule;
}

// FFTW planning is not thread-safe.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

const GaussRule& gauss16() {
  static const GaussRule rule = make_rule<16>();
  return rule;
}

void append_panels(double a, double b, std::size_t panels, const GaussRule& rule,
                   std::vector<double>& nodes, std::vector<double>& weights) {
  if (panels == 0 || !(b > a)) return;
  const double width = (b - a) / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + width * static_cast<double>(p);
    const double mid = lo + 0.5 * width;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      nodes.push_back(mid + 0.5 * width * rule.nodes[k]);
      weights.push_back(0.5 * width * rule.weights[k]);
    }
  }
}

void fft_inplace(std::vector<Complex>& data, int sign) {
  if (data.empty()) return;
  auto* buffer = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(data.size()), buffer, buffer,
                            sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan);
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::string format_e12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", x);
  return buf;
}

}  // namespace pw::detail
