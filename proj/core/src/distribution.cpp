#include "betalog/distribution.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "betalog/specfun.hpp"

namespace betalog {

namespace {
constexpr double kLn2 = std::numbers::ln2;
constexpr double kPi = std::numbers::pi;

// Log-integrand drop (in nats) defining the truncated support.
constexpr double kLogDrop = 46.0;
}  // namespace

void require_domain(const ThetaPoint& p) {
  if (!(p.theta1 + p.theta2 > 0.0)) {
    throw std::domain_error("theta1 + theta2 must be positive, got " +
                            std::to_string(p.theta1 + p.theta2));
  }
  if (!(p.theta1 - p.theta2 > 0.0)) {
    throw std::domain_error("theta1 - theta2 must be positive, got " +
                            std::to_string(p.theta1 - p.theta2));
  }
}

double log_sech(double x) noexcept {
  const double ax = std::fabs(x);
  return kLn2 - ax - std::log1p(std::exp(-2.0 * ax));
}

double potential(const ThetaPoint& p) {
  require_domain(p);
  const double lo = 0.5 * (p.theta1 - p.theta2);
  const double hi = 0.5 * (p.theta1 + p.theta2);
  return specfun::log_beta(lo, hi) + kLn2 * (p.theta1 - 1.0);
}

double log_pdf(const ThetaPoint& p, double x) {
  return p.theta1 * log_sech(x) + p.theta2 * x - potential(p);
}

double pdf(const ThetaPoint& p, double x) { return std::exp(log_pdf(p, x)); }

namespace {

double uniform01(std::mt19937_64& rng) {
  // (0, 1]: strictly positive so logs stay finite.
  return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

double standard_normal(std::mt19937_64& rng) {
  const double u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

// ln of a Gamma(shape, 1) draw. Marsaglia-Tsang for shape >= 1; the
// shape < 1 case boosts and applies the U^(1/shape) factor in log space,
// which never underflows.
double log_gamma_draw(std::mt19937_64& rng, double shape) {
  if (shape < 1.0) {
    return log_gamma_draw(rng, shape + 1.0) + std::log(uniform01(rng)) / shape;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / (3.0 * std::sqrt(d));
  for (;;) {
    const double x = standard_normal(rng);
    const double t = 1.0 + c * x;
    if (t <= 0.0) continue;
    const double v = t * t * t;
    const double u = uniform01(rng);
    if (u < 1.0 - 0.0331 * x * x * x * x) return std::log(d * v);
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
      return std::log(d * v);
    }
  }
}

}  // namespace

std::vector<double> sample(const ThetaPoint& p, std::size_t n,
                           std::uint64_t seed) {
  require_domain(p);
  if (n < 1) throw std::domain_error("sample requires n >= 1");
  const double shape_hi = 0.5 * (p.theta1 + p.theta2);
  const double shape_lo = 0.5 * (p.theta1 - p.theta2);
  std::mt19937_64 rng(seed);
  std::vector<double> draws(n);
  for (auto& x : draws) {
    const double lg1 = log_gamma_draw(rng, shape_hi);
    const double lg2 = log_gamma_draw(rng, shape_lo);
    x = 0.5 * (lg1 - lg2);
  }
  return draws;
}

void support_bounds(const ThetaPoint& p, int k, double& lower, double& upper) {
  require_domain(p);
  const double mode = std::atanh(p.theta2 / p.theta1);
  const double rate_right = p.theta1 - p.theta2;
  const double rate_left = p.theta1 + p.theta2;
  upper = mode + kLogDrop / rate_right;
  lower = mode - kLogDrop / rate_left;
  // Widen for the polynomial factor x^k; two passes suffice.
  for (int pass = 0; pass < 2 && k > 0; ++pass) {
    upper = mode + (kLogDrop + k * std::log1p(std::fabs(upper))) / rate_right;
    lower = mode - (kLogDrop + k * std::log1p(std::fabs(lower))) / rate_left;
  }
}

double moment(const ThetaPoint& p, int k, const QuadratureSpec& spec) {
  require_domain(p);
  if (k < 0) throw std::domain_error("moment requires k >= 0");
  double lo, hi;
  support_bounds(p, k, lo, hi);
  const double phi = potential(p);
  auto integrand = [&](double x) {
    const double lp = p.theta1 * log_sech(x) + p.theta2 * x - phi;
    return std::pow(x, k) * std::exp(lp);
  };
  const IntegralResult r = integrate(integrand, lo, hi, spec);
  if (!r.converged) {
    throw NonConvergenceError("moment quadrature did not converge at k=" +
                              std::to_string(k));
  }
  return r.value;
}

namespace {

// Shared machinery for the Bernoulli/Euler moment integrals:
//   prefactor * Int (x - 1/2 + i t)^n sech^rho(pi t) dt,
// evaluated as two real quadratures of the real and imaginary parts.
MomentResult complex_sech_moment(int n, double x, int rho, double prefactor,
                                 const QuadratureSpec& spec) {
  if (n < 0 || n > 20) {
    throw std::domain_error("polynomial moment order must lie in [0, 20]");
  }
  const double rate = rho * kPi;
  double half_width = kLogDrop / rate;
  for (int pass = 0; pass < 3; ++pass) {
    half_width = (kLogDrop + n * std::log1p(half_width)) / rate;
  }

  auto power = [&](double t) {
    std::complex<double> z(x - 0.5, t);
    std::complex<double> acc(1.0, 0.0);
    for (int i = 0; i < n; ++i) acc *= z;
    return acc;
  };
  auto weight = [&](double t) {
    const double ls = log_sech(kPi * t);
    return std::exp(rho * ls);
  };

  auto f_re = [&](double t) { return power(t).real() * weight(t); };
  auto f_im = [&](double t) { return power(t).imag() * weight(t); };

  const IntegralResult re = integrate(f_re, -half_width, half_width, spec);
  const IntegralResult im = integrate(f_im, -half_width, half_width, spec);
  if (!re.converged || !im.converged) {
    throw NonConvergenceError("polynomial moment quadrature did not converge");
  }
  MomentResult out;
  out.value_real = prefactor * re.value;
  out.value_imag = prefactor * im.value;
  out.est_error = std::fabs(prefactor) * (re.est_error + im.est_error);
  return out;
}

}  // namespace

MomentResult bernoulli_poly_via_moments(int n, double x,
                                        const QuadratureSpec& spec) {
  return complex_sech_moment(n, x, 2, kPi / 2.0, spec);
}

MomentResult euler_poly_via_moments(int n, double x,
                                    const QuadratureSpec& spec) {
  return complex_sech_moment(n, x, 1, 1.0, spec);
}

namespace {

constexpr int kMaxPolyOrder = 32;

// Pascal's triangle; exact in double well past order 32.
double binomial(int n, int k) {
  static const auto table = [] {
    std::array<std::array<double, kMaxPolyOrder + 2>, kMaxPolyOrder + 2> c{};
    for (int i = 0; i <= kMaxPolyOrder + 1; ++i) {
      c[i][0] = 1.0;
      for (int j = 1; j <= i; ++j) {
        c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0.0);
      }
    }
    return c;
  }();
  return table[n][k];
}

}  // namespace

double bernoulli_number(int n) {
  if (n < 0 || n > kMaxPolyOrder) {
    throw std::domain_error("bernoulli_number order out of range");
  }
  static const auto table = [] {
    std::array<double, kMaxPolyOrder + 1> b{};
    b[0] = 1.0;
    for (int m = 1; m <= kMaxPolyOrder; ++m) {
      double acc = 0.0;
      for (int k = 0; k < m; ++k) acc += binomial(m + 1, k) * b[k];
      b[m] = -acc / (m + 1.0);
    }
    return b;
  }();
  return table[n];
}

double bernoulli_polynomial(int n, double x) {
  if (n < 0 || n > kMaxPolyOrder) {
    throw std::domain_error("bernoulli_polynomial order out of range");
  }
  double acc = 0.0;
  for (int k = 0; k <= n; ++k) {
    acc += binomial(n, k) * bernoulli_number(k) * std::pow(x, n - k);
  }
  return acc;
}

double euler_polynomial(int n, double x) {
  if (n < 0 || n > kMaxPolyOrder) {
    throw std::domain_error("euler_polynomial order out of range");
  }
  std::array<double, kMaxPolyOrder + 1> e{};
  for (int m = 0; m <= n; ++m) {
    double acc = 0.0;
    for (int k = 0; k < m; ++k) acc += binomial(m, k) * e[k];
    e[m] = std::pow(x, m) - 0.5 * acc;
  }
  return e[n];
}

}  // namespace betalog
