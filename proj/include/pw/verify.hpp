#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pw/engines.hpp"

namespace pw {

enum class Suite { pulses, covariance, engines, all };

Suite parse_suite(const std::string& name);

struct CheckResult {
  std::string suite;
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  [[nodiscard]] bool passed() const;
  void print(std::ostream& out) const;
};

/// Runs the oracle comparisons and invariant checks of the chosen suite.
/// `flip` is forwarded to every closed-form engine (mutation hook).
VerifyReport verify(Suite suite, PrintedCoefficient flip = PrintedCoefficient::none);

/// Looks up a printed coefficient by name; throws DomainError if unknown.
PrintedCoefficient parse_coefficient(const std::string& name);

// Individual oracle checks, shared with the acceptance suite. Each returns the
// measured deviation (relative to peak where noted).

/// Closed form vs numeric Wigner spectrum of the input covariance; relative to peak.
double input_spectrum_deviation(double gamma, const UniformGrid& t, const UniformGrid& omega);
/// Printed cavity spectrum vs numeric spectrum of the output covariance; relative to peak.
double cavity_spectrum_deviation(const CavityModel& m, double gamma, const UniformGrid& t,
                                 const UniformGrid& omega, PrintedCoefficient flip = PrintedCoefficient::none);
/// Printed DPA pulses vs the matrix-exponential convolution oracle; sup norm.
double dpa_pulse_deviation(const DpaModel& m, double gamma, const UniformGrid& t,
                           PrintedCoefficient flip = PrintedCoefficient::none);
/// Gaussian part vs vacuum quadrature at off-diagonal sample points; max abs.
double dpa_chi_deviation(const DpaModel& m, PrintedCoefficient flip = PrintedCoefficient::none);
/// Printed S_out vs numeric spectrum of the output covariance, all four entries; relative to peak.
double dpa_spectrum_deviation(const DpaModel& m, double gamma, const UniformGrid& t, const UniformGrid& omega,
                              PrintedCoefficient flip = PrintedCoefficient::none);

/// t in [0, 4] x 201
UniformGrid default_t_grid();
/// omega in [-25, 25] x 201
UniformGrid default_omega_grid();

}  // namespace pw
