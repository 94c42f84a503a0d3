#pragma once

#include <functional>

#include "pw/pulses.hpp"
#include "pw/rational.hpp"

namespace pw::oracle {

/// Inverse transform of a strictly proper rational by residues:
/// x(t) = sum over poles p of Res[R(w) e^{iwt}, p] * i, upper half plane only.
/// Simple poles only.
Complex residue_inverse(const Rational& r, double t);

/// int_a^b f(x) dx by adaptive Gauss-Kronrod.
Complex integrate(const std::function<Complex(double)>& f, double a, double b, double tol = 1e-12);

}  // namespace pw::oracle
