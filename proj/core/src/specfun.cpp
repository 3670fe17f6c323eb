#include "betalog/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace betalog::specfun {

namespace {

// Even Bernoulli numbers B_2 .. B_20.
constexpr std::array<double, 10> kBernoulli2k = {
    1.0 / 6.0,     -1.0 / 30.0,     1.0 / 42.0,      -1.0 / 30.0,
    5.0 / 66.0,    -691.0 / 2730.0, 7.0 / 6.0,       -3617.0 / 510.0,
    43867.0 / 798.0, -174611.0 / 330.0};

// B_2j / (2j)! for j = 1 .. 12, the Euler-Maclaurin correction weights.
constexpr std::array<double, 12> kEulerMaclaurinC = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0,
    77683.0 / 14101100039391805440000.0,
    -236364091.0 / 1689515283456000000000000.0};

// Asymptotic series kick in here; below, shift upward by recurrence.
constexpr double kAsymptoticCut = 10.0;

[[noreturn]] void domain_fail(const char* what) {
  throw std::domain_error(what);
}

void require_positive(double z, const char* name) {
  if (!(z > 0.0)) {
    throw std::domain_error(std::string(name) + " requires a positive argument, got " +
                            std::to_string(z));
  }
}

// Stirling series for ln Gamma, valid for z >= kAsymptoticCut.
double log_gamma_asymptotic(double z) {
  const double inv = 1.0 / z;
  const double inv2 = inv * inv;
  double series = 0.0;
  double p = inv;
  for (std::size_t k = 1; k <= kBernoulli2k.size(); ++k) {
    series += kBernoulli2k[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * p;
    p *= inv2;
  }
  constexpr double half_ln_two_pi = 0.91893853320467274178032973640562;
  return (z - 0.5) * std::log(z) - z + half_ln_two_pi + series;
}

double digamma_asymptotic(double z) {
  const double inv = 1.0 / z;
  const double inv2 = inv * inv;
  double series = 0.0;
  double p = inv2;
  for (std::size_t k = 1; k <= kBernoulli2k.size(); ++k) {
    series += kBernoulli2k[k - 1] / (2.0 * k) * p;
    p *= inv2;
  }
  return std::log(z) - 0.5 * inv - series;
}

// psi^(m) for m >= 1 and z >= kAsymptoticCut:
//   (-1)^(m-1) [ (m-1)!/z^m + m!/(2 z^(m+1))
//                + sum_k B_2k (2k+1)...(2k+m-1) / z^(2k+m) ]
double polygamma_asymptotic(int m, double z) {
  constexpr std::array<double, 4> factorial = {1.0, 1.0, 2.0, 6.0};
  const double inv = 1.0 / z;
  const double inv2 = inv * inv;
  double sum = factorial[m - 1] * std::pow(inv, m) +
               0.5 * factorial[m] * std::pow(inv, m + 1);
  double p = std::pow(inv, m + 2);
  for (std::size_t k = 1; k <= kBernoulli2k.size(); ++k) {
    double poch = 1.0;
    for (int j = 1; j < m; ++j) poch *= 2.0 * k + j;
    sum += kBernoulli2k[k - 1] * poch * p;
    p *= inv2;
  }
  return (m % 2 == 1) ? sum : -sum;
}

}  // namespace

double log_gamma(double z) {
  require_positive(z, "log_gamma");
  double shift = 0.0;
  while (z < kAsymptoticCut) {
    shift -= std::log(z);
    z += 1.0;
  }
  return shift + log_gamma_asymptotic(z);
}

double digamma(double z) {
  require_positive(z, "digamma");
  double shift = 0.0;
  while (z < kAsymptoticCut) {
    shift -= 1.0 / z;
    z += 1.0;
  }
  return shift + digamma_asymptotic(z);
}

double polygamma(int m, double z) {
  if (m < 0 || m > 3) domain_fail("polygamma order must lie in [0, 3]");
  require_positive(z, "polygamma");
  if (m == 0) return digamma(z);
  // psi^(m)(z) = psi^(m)(z+1) + (-1)^(m+1) m! / z^(m+1)
  constexpr std::array<double, 4> factorial = {1.0, 1.0, 2.0, 6.0};
  const double sign = (m % 2 == 1) ? 1.0 : -1.0;
  double shift = 0.0;
  while (z < kAsymptoticCut) {
    shift += sign * factorial[m] * std::pow(z, -(m + 1));
    z += 1.0;
  }
  return shift + polygamma_asymptotic(m, z);
}

double hurwitz_zeta(double s, double a) {
  if (!(s > 1.0)) domain_fail("hurwitz_zeta requires s > 1");
  require_positive(a, "hurwitz_zeta");

  const double eps = std::numeric_limits<double>::epsilon();
  long n_terms = static_cast<long>(
      std::max({10.0, std::ceil(s) + 5.0, std::ceil(16.0 - a)}));

  for (int attempt = 0;; ++attempt, n_terms *= 2) {
    const double base = static_cast<double>(n_terms) + a;
    // Truncated sum (small terms first), integral tail, half-term.
    double ans = 0.0;
    for (long k = n_terms - 1; k >= 0; --k) {
      ans += std::pow(static_cast<double>(k) + a, -s);
    }
    ans += std::pow(base, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(base, -s);

    // Euler-Maclaurin corrections: c_j * (s)_(2j-1) * base^(-s-2j+1).
    double poch = s;
    double power = std::pow(base, -s - 1.0);
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t j = 1; j <= kEulerMaclaurinC.size(); ++j) {
      const double delta = kEulerMaclaurinC[j - 1] * poch * power;
      ans += delta;
      const double mag = std::fabs(delta);
      if (mag <= 0.25 * eps * std::fabs(ans)) return ans;
      if (mag >= prev) break;  // series turned; enlarge the direct sum
      prev = mag;
      poch *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
      power /= base * base;
    }
    if (attempt >= 4) return ans;
  }
}

double riemann_zeta(double s) { return hurwitz_zeta(s, 1.0); }

double harmonic_number(long n, int r) {
  if (n < 0) domain_fail("harmonic_number requires n >= 0");
  if (r < 1) domain_fail("harmonic_number requires r >= 1");
  double sum = 0.0;
  for (long k = n; k >= 1; --k) {
    sum += std::pow(static_cast<double>(k), -static_cast<double>(r));
  }
  return sum;
}

double log_beta(double x, double y) {
  require_positive(x, "log_beta");
  require_positive(y, "log_beta");
  return log_gamma(x) + log_gamma(y) - log_gamma(x + y);
}

}  // namespace betalog::specfun
