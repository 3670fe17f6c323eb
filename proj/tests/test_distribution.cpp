#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "betalog/distribution.hpp"
#include "betalog/specfun.hpp"
#include "betalog/verification.hpp"

using namespace betalog;
constexpr double kPi = std::numbers::pi;

namespace {
const std::vector<ThetaPoint> kTestPoints = {
    {1.0, 0.0}, {2.0, 0.0}, {3.0, 1.0}, {5.0, -2.0}, {0.6, 0.5}};
}

TEST_CASE("potential closed-form values") {
  CHECK(potential({1.0, 0.0}) == doctest::Approx(std::log(kPi)).epsilon(1e-14));
  CHECK(potential({2.0, 0.0}) ==
        doctest::Approx(std::numbers::ln2).epsilon(1e-14));
  // Gamma form: ln G((t1-t2)/2) + ln G((t1+t2)/2) - ln G(t1) + ln2 (t1-1)
  for (const ThetaPoint& p : kTestPoints) {
    const double lo = 0.5 * (p.theta1 - p.theta2);
    const double hi = 0.5 * (p.theta1 + p.theta2);
    const double gamma_form = specfun::log_gamma(lo) + specfun::log_gamma(hi) -
                              specfun::log_gamma(p.theta1) +
                              std::numbers::ln2 * (p.theta1 - 1.0);
    CHECK(potential(p) == doctest::Approx(gamma_form).epsilon(1e-13));
    CHECK(potential(p) ==
          potential({p.theta1, -p.theta2}));  // beta symmetry, exact
  }
  CHECK_THROWS_AS((void)potential({1.0, 1.0}), std::domain_error);
  CHECK_THROWS_AS((void)potential({1.0, -2.0}), std::domain_error);
}

TEST_CASE("log_pdf and pdf point values") {
  CHECK(log_pdf({1.0, 0.0}, 0.0) ==
        doctest::Approx(-1.1447298858494002).epsilon(1e-14));
  CHECK(log_pdf({2.0, 0.0}, 0.0) ==
        doctest::Approx(std::log(0.5)).epsilon(1e-14));
  CHECK(pdf({1.0, 0.0}, 0.0) == doctest::Approx(1.0 / kPi).epsilon(1e-14));
  CHECK(pdf({2.0, 0.0}, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("log_sech stays finite far into the tails") {
  CHECK(log_sech(0.0) == 0.0);
  CHECK(log_sech(800.0) ==
        doctest::Approx(std::numbers::ln2 - 800.0).epsilon(1e-15));
  CHECK(std::isfinite(log_sech(1e308)));
  CHECK(log_sech(3.0) == doctest::Approx(std::log(1.0 / std::cosh(3.0))).epsilon(1e-14));
}

TEST_CASE("reflection: pdf(t1,t2)(x) = pdf(t1,-t2)(-x)") {
  for (const ThetaPoint& p : kTestPoints) {
    const ThetaPoint q{p.theta1, -p.theta2};
    for (double x : {-3.7, -0.4, 0.0, 1.1, 6.2}) {
      CHECK(pdf(p, x) == doctest::Approx(pdf(q, -x)).epsilon(1e-14));
    }
  }
}

TEST_CASE("normalization at the five reference points") {
  for (const ThetaPoint& p : kTestPoints) {
    CHECK(std::fabs(moment(p, 0) - 1.0) <= 1e-10);
  }
}

TEST_CASE("moments against closed forms and both schemes") {
  QuadratureSpec gk;
  gk.scheme = QuadScheme::gauss_kronrod;
  // Odd moment of an even density.
  CHECK(std::fabs(moment({2.5, 0.0}, 1)) <= 1e-11);
  // Second moments equal g22 of the Fisher matrix at the special points.
  CHECK(moment({2.0, 0.0}, 2) ==
        doctest::Approx(kPi * kPi / 12.0).epsilon(1e-10));
  CHECK(moment({1.0, 0.0}, 2) ==
        doctest::Approx(kPi * kPi / 4.0).epsilon(1e-10));
  CHECK(moment({2.0, 0.0}, 2, gk) ==
        doctest::Approx(kPi * kPi / 12.0).epsilon(1e-10));
  CHECK_THROWS_AS((void)moment({2.0, 0.0}, -1), std::domain_error);
}

TEST_CASE("moment-derivative duality of the potential") {
  // E[X] = dphi/dt2 and E[ln sech X] = dphi/dt1 (central differences).
  const double h = 1e-6;
  for (const ThetaPoint& p : kTestPoints) {
    const double d2 =
        (potential({p.theta1, p.theta2 + h}) -
         potential({p.theta1, p.theta2 - h})) /
        (2.0 * h);
    CHECK(std::fabs(moment(p, 1) - d2) <= 1e-8);
    const double d1 =
        (potential({p.theta1 + h, p.theta2}) -
         potential({p.theta1 - h, p.theta2})) /
        (2.0 * h);
    const double phi = potential(p);
    auto integrand = [&](double x) {
      return log_sech(x) *
             std::exp(p.theta1 * log_sech(x) + p.theta2 * x - phi);
    };
    double lo, hi;
    support_bounds(p, 1, lo, hi);
    const double mean_ls = integrate(integrand, lo, hi).value;
    CHECK(std::fabs(mean_ls - d1) <= 1e-8);
  }
}

TEST_CASE("sampler determinism and symmetry") {
  const auto a = sample({1.0, 0.0}, 5000, 99);
  const auto b = sample({1.0, 0.0}, 5000, 99);
  CHECK(a == b);  // identical sequences for identical seeds
  const auto c = sample({1.0, 0.0}, 5000, 100);
  CHECK(a != c);

  double mean = 0.0;
  const auto big = sample({1.0, 0.0}, 100000, 5);
  for (double x : big) mean += x;
  mean /= static_cast<double>(big.size());
  CHECK(std::fabs(mean) <= 0.02);

  const auto v = sample({2.0, 0.0}, 100000, 6);
  double m = 0.0;
  for (double x : v) m += x;
  m /= static_cast<double>(v.size());
  double var = 0.0;
  for (double x : v) var += (x - m) * (x - m);
  var /= static_cast<double>(v.size());
  CHECK(var == doctest::Approx(kPi * kPi / 12.0).epsilon(0.05));

  CHECK_THROWS_AS((void)sample({1.0, 0.0}, 0, 1), std::domain_error);
  CHECK_THROWS_AS((void)sample({1.0, 2.0}, 10, 1), std::domain_error);
}

TEST_CASE("sampler matches the density law (KS at the 1% level)") {
  const double crit = 1.6276236307187293 / std::sqrt(100000.0);
  for (const ThetaPoint& p : {ThetaPoint{2.0, 0.0}, ThetaPoint{3.0, 1.0}}) {
    double lo, hi;
    support_bounds(p, 0, lo, hi);
    const double phi = potential(p);
    auto dens = [&](double x) {
      return std::exp(p.theta1 * log_sech(x) + p.theta2 * x - phi);
    };
    const double d = ks_statistic(sample(p, 100000, 31), dens, lo);
    CHECK(d <= crit);
  }
}

TEST_CASE("recurrence oracles match hand values") {
  CHECK(bernoulli_number(0) == 1.0);
  CHECK(bernoulli_number(1) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(bernoulli_number(2) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(bernoulli_number(3) == doctest::Approx(0.0).scale(1e-14));
  CHECK(bernoulli_number(12) ==
        doctest::Approx(-691.0 / 2730.0).epsilon(1e-12));
  CHECK(bernoulli_polynomial(1, 0.0) == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(bernoulli_polynomial(2, 0.0) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(euler_polynomial(0, 0.3) == 1.0);
  CHECK(euler_polynomial(1, 0.5) == doctest::Approx(0.0).scale(1e-15));
  CHECK(euler_polynomial(2, 0.0) == doctest::Approx(0.0).scale(1e-14));
  // E_2(x) = x^2 - x
  CHECK(euler_polynomial(2, 0.7) ==
        doctest::Approx(0.7 * 0.7 - 0.7).epsilon(1e-14));
}

TEST_CASE("polynomial moment integrals reproduce the recurrences") {
  for (int n : {0, 1, 2, 5, 8, 12}) {
    for (double x : {0.0, 0.25, 0.5, 1.0}) {
      const MomentResult mb = bernoulli_poly_via_moments(n, x);
      CHECK(std::fabs(mb.value_real - bernoulli_polynomial(n, x)) <= 1e-8);
      CHECK(std::fabs(mb.value_imag) <= 1e-10);
      const MomentResult me = euler_poly_via_moments(n, x);
      CHECK(std::fabs(me.value_real - euler_polynomial(n, x)) <= 1e-8);
      CHECK(std::fabs(me.value_imag) <= 1e-10);
    }
  }
  CHECK(bernoulli_poly_via_moments(0, 0.77).value_real ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(euler_poly_via_moments(0, -3.0).value_real ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS((void)bernoulli_poly_via_moments(21, 0.0),
                  std::domain_error);
}
