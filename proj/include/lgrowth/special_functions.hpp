#pragma once

#include "lgrowth/numerics.hpp"

namespace lgrowth {

/// Real parameters (a, b; c) of the Gauss hypergeometric function.
struct Hyp2F1Params {
    double a;
    double b;
    double c;
};

/// True when gauss_2f1 can evaluate at t: |t| < 1 directly, or Re t < 1/2
/// through the Pfaff transformation t -> t/(t-1).
bool hyp2f1_admissible(cplx t);

/// Principal-branch 2F1(a, b; c; t).
///
/// Power series for |t| <= 0.7. Beyond that the argument is moved by
/// whichever of t/(t-1) (Pfaff) and 1-t (connection formula, only when
/// c-a-b is not close to an integer) gives the smallest modulus, falling
/// back to the direct series when that is smaller still.
///
/// Throws DomainError for c a non-positive integer or t outside the
/// admissible set, ConvergenceError if a series needs more than 10^4 terms.
cplx gauss_2f1(const Hyp2F1Params& params, cplx t);

/// log Gamma(x). Lanczos approximation (g = 7, 9 terms) for Re x >= 1/2,
/// one reflection step below. In the reflected half-plane the imaginary
/// part is determined modulo 2 pi. Throws DomainError at the poles.
cplx log_gamma(cplx x);

/// Gamma(x) for real x, with its sign. Throws DomainError at the poles.
double gamma_fn(double x);

/// 1 / Gamma(x), zero at the non-positive integers.
double reciprocal_gamma(double x);

/// base^exponent = exp(exponent * Log base) with Arg in (-pi, pi].
/// Exponent 0 returns exactly 1. Throws DomainError for base = 0 with a
/// non-positive exponent.
cplx branch_power(cplx base, double exponent);

/// Like branch_power but with the branch cut along the ray at angle
/// `cut_angle`: the argument is taken in (cut_angle - 2 pi, cut_angle].
cplx branch_power_cut(cplx base, double exponent, double cut_angle);

}  // namespace lgrowth
