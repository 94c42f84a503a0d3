#include "pw/rational.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "pw/errors.hpp"

namespace pw {

Polynomial::Polynomial(std::vector<Complex> coefficients) : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == Complex{0.0, 0.0}) {
    coefficients_.pop_back();
  }
}

Polynomial Polynomial::from_roots(std::span<const Complex> roots, Complex leading) {
  Polynomial p = constant(leading);
  for (const Complex& r : roots) p = p * linear(-r, 1.0);
  return p;
}

Complex Polynomial::leading() const {
  return coefficients_.empty() ? Complex{0.0, 0.0} : coefficients_.back();
}

Complex Polynomial::operator()(Complex x) const {
  Complex acc{0.0, 0.0};
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Complex> Polynomial::roots() const {
  const int n = degree();
  if (n < 1) return {};
  if (n == 1) return {-coefficients_[0] / coefficients_[1]};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -coefficients_[i] / coefficients_[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  std::vector<Complex> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  // One Newton step per root tightens the eigenvalue estimate.
  std::vector<Complex> derivative;
  for (int k = 1; k <= n; ++k) derivative.push_back(coefficients_[k] * static_cast<double>(k));
  const Polynomial dp(derivative);
  for (Complex& r : out) {
    const Complex d = dp(r);
    if (std::abs(d) > 0.0) r -= (*this)(r) / d;
  }
  return out;
}

Polynomial Polynomial::pow(int n) const {
  Polynomial out = constant(1.0);
  for (int i = 0; i < n; ++i) out = out * *this;
  return out;
}

Polynomial Polynomial::scaled(Complex c) const {
  std::vector<Complex> coeffs = coefficients_;
  for (Complex& x : coeffs) x *= c;
  return Polynomial(std::move(coeffs));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Complex> out(a.coefficients_.size() + b.coefficients_.size() - 1, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      out[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Complex> out(std::max(a.coefficients_.size(), b.coefficients_.size()),
                           Complex{0.0, 0.0});
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) out[i] += a.coefficients_[i];
  for (std::size_t i = 0; i < b.coefficients_.size(); ++i) out[i] += b.coefficients_[i];
  return Polynomial(std::move(out));
}

Rational::Rational(Polynomial numerator, Polynomial denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_.is_zero()) throw DomainError("rational function with zero denominator");
}

Complex Rational::operator()(double omega) const {
  const Complex den = denominator_(omega);
  if (std::abs(den) < kPoleGuard) {
    throw EvaluationError("rational function evaluated at a pole, omega = " +
                          std::to_string(omega));
  }
  return numerator_(omega) / den;
}

Rational Rational::simplified(double tol) const {
  if (numerator_.degree() < 1 || denominator_.degree() < 1) return *this;
  std::vector<Complex> zs = numerator_.roots();
  std::vector<Complex> ps = denominator_.roots();
  bool cancelled = false;
  for (auto zi = zs.begin(); zi != zs.end();) {
    auto match = std::find_if(ps.begin(), ps.end(), [&](const Complex& p) {
      return std::abs(p - *zi) <= tol * std::max(1.0, std::abs(p));
    });
    if (match != ps.end()) {
      ps.erase(match);
      zi = zs.erase(zi);
      cancelled = true;
    } else {
      ++zi;
    }
  }
  if (!cancelled) return *this;
  return {Polynomial::from_roots(zs, numerator_.leading()),
          Polynomial::from_roots(ps, denominator_.leading())};
}

std::vector<Complex> Rational::laurent_at_infinity(int order) const {
  if (!strictly_proper()) throw DomainError("Laurent expansion needs a strictly proper function");
  std::vector<Complex> out(static_cast<std::size_t>(order), Complex{0.0, 0.0});
  if (numerator_.is_zero()) return out;
  // With x = 1/omega: N/D = x^{m-n} * (sum a_{n-j} x^j) / (sum b_{m-j} x^j).
  const int n = numerator_.degree();
  const int m = denominator_.degree();
  const auto& a = numerator_.coefficients();
  const auto& b = denominator_.coefficients();
  const int shift = m - n;
  const int terms = order - shift + 1;
  if (terms <= 0) return out;
  std::vector<Complex> q(static_cast<std::size_t>(terms), Complex{0.0, 0.0});
  for (int j = 0; j < terms; ++j) {
    Complex acc = (n - j >= 0) ? a[static_cast<std::size_t>(n - j)] : Complex{0.0, 0.0};
    for (int k = 1; k <= j; ++k) {
      if (m - k >= 0) acc -= b[static_cast<std::size_t>(m - k)] * q[static_cast<std::size_t>(j - k)];
    }
    q[static_cast<std::size_t>(j)] = acc / b[static_cast<std::size_t>(m)];
  }
  for (int j = 0; j < terms; ++j) {
    const int p = shift + j;
    if (p >= 1 && p <= order) out[static_cast<std::size_t>(p - 1)] = q[static_cast<std::size_t>(j)];
  }
  return out;
}

Rational operator*(const Rational& a, const Rational& b) {
  return {a.numerator_ * b.numerator_, a.denominator_ * b.denominator_};
}

Rational operator*(Complex c, const Rational& r) { return {r.numerator_.scaled(c), r.denominator_}; }

}  // namespace pw
