#include "pw/oracles.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "detail/numerics.hpp"
#include "pw/engines.hpp"

namespace pw {

namespace {

Eigen::Matrix2d drift(const DpaModel& m) {
  Eigen::Matrix2d a;
  a << -0.5 * m.kappa, 0.5 * m.epsilon, 0.5 * m.epsilon, -0.5 * m.kappa;
  return a;
}

Eigen::Matrix2d kernel(const Eigen::Matrix2d& a, double kappa, double u) {
  return kappa * (a * u).exp();
}

}  // namespace

std::vector<Eigen::Vector2cd> dpa_pulse_oracle(const DpaModel& m, const TemporalPulse& input,
                                               const UniformGrid& grid) {
  const Eigen::Matrix2d a = drift(m);
  const auto& rule = detail::gauss16();
  const double panel = std::min(0.25, 2.0 / m.kappa);
  std::vector<Eigen::Vector2cd> out;
  std::vector<double> nodes, weights;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    Eigen::Vector2cd v(input(t), 0.0);
    if (t > 0.0) {
      nodes.clear();
      weights.clear();
      detail::append_panels(0.0, t, static_cast<std::size_t>(std::ceil(t / panel)), rule, nodes, weights);
      for (std::size_t k = 0; k < nodes.size(); ++k) {
        const Eigen::Matrix2d kk = kernel(a, m.kappa, t - nodes[k]);
        v -= weights[k] * input(nodes[k]) * kk.col(0).cast<Complex>();
      }
    }
    out.push_back(v);
  }
  return out;
}

Matrix2c dpa_vacuum_oracle(const DpaModel& m, double t, double r) {
  const Eigen::Matrix2d a = drift(m);
  Eigen::Matrix2d n = Eigen::Matrix2d::Zero();
  n(0, 0) = 1.0;
  Eigen::Matrix2d out = Eigen::Matrix2d::Zero();
  if (t > r) out -= kernel(a, m.kappa, t - r) * n;
  if (t < r) out -= n * kernel(a, m.kappa, r - t).transpose();

  const double slow = 0.5 * (m.kappa - m.epsilon);
  const double top = std::min(t, r);
  const double length = 20.0 / slow;
  const double panel = std::min(0.5, 4.0 / m.kappa);
  std::vector<double> nodes, weights;
  detail::append_panels(top - length, top, static_cast<std::size_t>(std::ceil(length / panel)), detail::gauss16(),
                        nodes, weights);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const double s = nodes[k];
    out += weights[k] * kernel(a, m.kappa, t - s) * n * kernel(a, m.kappa, r - s).transpose();
  }
  return out.cast<Complex>();
}

TemporalPulse cavity_pulse_oracle(const CavityModel& m, const TemporalPulse& input, const UniformGrid& grid) {
  return network_output_pulse(cavity_transfer(m), to_frequency(input), grid);
}

}  // namespace pw
