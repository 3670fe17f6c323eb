#pragma once

#include <cstdint>
#include <vector>

#include "betalog/quadrature.hpp"
#include "betalog/theta.hpp"

namespace betalog {

/// Result of a (possibly complex-valued) moment computed by quadrature.
struct MomentResult {
  double value_real = 0.0;
  double value_imag = 0.0;
  double est_error = 0.0;
};

/// ln sech(x), overflow-safe for any representable x:
/// ln 2 - |x| - ln(1 + e^(-2|x|)).
double log_sech(double x) noexcept;

/// Log-normalizer phi(theta) = ln B((t1-t2)/2, (t1+t2)/2) + (ln 2)(t1 - 1).
double potential(const ThetaPoint& p);

/// ln p(x; theta) = theta1 ln sech(x) + theta2 x - phi(theta).
double log_pdf(const ThetaPoint& p, double x);

/// exp(log_pdf); integrates to one over the real line.
double pdf(const ThetaPoint& p, double x);

/// n i.i.d. draws, deterministic for a given seed. Uses the exact
/// transform X = (ln G1 - ln G2)/2 with G1 ~ Gamma((t1+t2)/2) and
/// G2 ~ Gamma((t1-t2)/2), equivalent to half the logit of a Beta variate.
/// Parallel batches stay reproducible by giving each batch its own seed.
std::vector<double> sample(const ThetaPoint& p, std::size_t n,
                           std::uint64_t seed);

/// E[X^k] by adaptive quadrature over the truncated support.
/// Throws NonConvergenceError when the level budget is exhausted.
double moment(const ThetaPoint& p, int k, const QuadratureSpec& spec = {});

/// [L, U] outside of which x^k * pdf(p, x) is below e^-46 of its peak.
/// Exposed so diagnostics can integrate the same truncated support.
void support_bounds(const ThetaPoint& p, int k, double& lower, double& upper);

/// Bernoulli polynomial B_n(x) as the moment
/// (pi/2) * Int (x + i t - 1/2)^n sech^2(pi t) dt, split into two real
/// quadratures. n <= 20.
MomentResult bernoulli_poly_via_moments(int n, double x,
                                        const QuadratureSpec& spec = {});

/// Euler polynomial E_n(x) as Int (x + i t - 1/2)^n sech(pi t) dt. n <= 20.
MomentResult euler_poly_via_moments(int n, double x,
                                    const QuadratureSpec& spec = {});

// Recurrence evaluations of the same polynomials. These share no code with
// the quadrature path above and serve as its cross-check.

/// B_n from sum_{k=0..n} C(n+1,k) B_k = 0.
double bernoulli_number(int n);

/// B_n(x) = sum_k C(n,k) B_k x^(n-k).
double bernoulli_polynomial(int n, double x);

/// E_n(x) from 2 x^n = E_n(x) + sum_{k=0..n} C(n,k) E_k(x).
double euler_polynomial(int n, double x);

}  // namespace betalog
