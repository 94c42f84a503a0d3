#pragma once

#include <span>
#include <vector>

#include "pw/types.hpp"

namespace pw {

/// Complex polynomial in one variable, coefficients in ascending order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coefficients);

  static Polynomial constant(Complex c) { return Polynomial({c}); }
  /// c0 + c1 x
  static Polynomial linear(Complex c0, Complex c1) { return Polynomial({c0, c1}); }
  /// leading * prod (x - root)
  static Polynomial from_roots(std::span<const Complex> roots, Complex leading);

  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coefficients_.empty(); }
  [[nodiscard]] const std::vector<Complex>& coefficients() const { return coefficients_; }
  [[nodiscard]] Complex leading() const;

  [[nodiscard]] Complex operator()(Complex x) const;

  /// Roots via the eigenvalues of the companion matrix.
  [[nodiscard]] std::vector<Complex> roots() const;

  [[nodiscard]] Polynomial pow(int n) const;
  [[nodiscard]] Polynomial scaled(Complex c) const;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);

 private:
  std::vector<Complex> coefficients_;
};

/// Ratio of two polynomials in the real frequency variable omega.
///
/// Evaluation on the real axis refuses points where |denominator| < 1e-14
/// and throws EvaluationError instead of returning inf.
class Rational {
 public:
  static constexpr double kPoleGuard = 1e-14;

  Rational() : Rational(Polynomial(), Polynomial::constant(1.0)) {}
  Rational(Polynomial numerator, Polynomial denominator);

  static Rational constant(Complex c) { return {Polynomial::constant(c), Polynomial::constant(1.0)}; }

  [[nodiscard]] const Polynomial& numerator() const { return numerator_; }
  [[nodiscard]] const Polynomial& denominator() const { return denominator_; }

  [[nodiscard]] Complex operator()(double omega) const;
  /// Evaluation anywhere in the complex plane, without the pole guard.
  [[nodiscard]] Complex at(Complex z) const { return numerator_(z) / denominator_(z); }

  [[nodiscard]] std::vector<Complex> poles() const { return denominator_.roots(); }
  [[nodiscard]] std::vector<Complex> zeros() const { return numerator_.roots(); }

  /// True when deg(numerator) < deg(denominator): decays at least as 1/omega.
  [[nodiscard]] bool strictly_proper() const {
    return numerator_.degree() < denominator_.degree();
  }

  /// Cancels numerator/denominator root pairs closer than `tol` (relative).
  [[nodiscard]] Rational simplified(double tol = 1e-9) const;

  /// Coefficients d_1..d_order of the expansion sum_p d_p omega^{-p} at infinity.
  /// Requires a strictly proper function.
  [[nodiscard]] std::vector<Complex> laurent_at_infinity(int order) const;

  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator*(Complex c, const Rational& r);

 private:
  Polynomial numerator_;
  Polynomial denominator_;
};

}  // namespace pw
