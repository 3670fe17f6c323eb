#pragma once

// Self-contained special-function kernel for positive real arguments:
// log-gamma, digamma, polygamma up to order 3, Hurwitz/Riemann zeta,
// generalized harmonic numbers, and log-beta. Everything else in the
// library reduces to these.
//
// All functions are pure and thread-safe. Arguments outside the stated
// domain raise std::domain_error; the manifold domain theta1 +- theta2 > 0
// guarantees callers never need analytic continuation.

namespace betalog::specfun {

/// ln Gamma(z) for z > 0. Relative error below 1e-13 on [1e-3, 1e6].
double log_gamma(double z);

/// psi(z) = d/dz ln Gamma(z) for z > 0.
double digamma(double z);

/// psi^(m)(z), the m-th derivative of digamma, for 0 <= m <= 3 and z > 0.
/// Upward recurrence into z >= 10, then the Bernoulli asymptotic series.
double polygamma(int m, double z);

/// Hurwitz zeta(s, a) = sum_{k>=0} (k+a)^-s for s > 1, a > 0,
/// by Euler-Maclaurin summation.
double hurwitz_zeta(double s, double a);

/// Riemann zeta(s) = hurwitz_zeta(s, 1) for s > 1.
double riemann_zeta(double s);

/// Generalized harmonic number H_n^(r) = sum_{k=1..n} k^-r; H_0 = 0.
double harmonic_number(long n, int r);

/// ln B(x, y) = ln Gamma(x) + ln Gamma(y) - ln Gamma(x+y) for x, y > 0.
/// Symmetric in (x, y) to the last bit.
double log_beta(double x, double y);

}  // namespace betalog::specfun
