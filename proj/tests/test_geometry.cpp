#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "betalog/distribution.hpp"
#include "betalog/geometry.hpp"
#include "betalog/specfun.hpp"

using namespace betalog;
constexpr double kPi = std::numbers::pi;

namespace {
const std::vector<ThetaPoint> kGrid = {
    {0.5, 0.0},  {0.5, 0.3},   {1.0, 0.0},  {2.0, 0.0},  {2.0, -1.2},
    {3.0, 1.0},  {4.25, 1.7},  {6.0, -4.0}, {8.0, 6.4},  {0.9, -0.3}};
}

TEST_CASE("fisher matrix closed-form values at the special points") {
  const FisherMatrix b = fisher({2.0, 0.0});
  CHECK(b.g11 == doctest::Approx(1.0 - kPi * kPi / 12.0).epsilon(1e-12));
  CHECK(b.g22 == doctest::Approx(kPi * kPi / 12.0).epsilon(1e-12));
  CHECK(std::fabs(b.g12) <= 1e-14);

  const FisherMatrix e = fisher({1.0, 0.0});
  CHECK(e.g11 == doctest::Approx(kPi * kPi / 12.0).epsilon(1e-12));
  CHECK(e.g22 == doctest::Approx(kPi * kPi / 4.0).epsilon(1e-12));
  CHECK(std::fabs(e.g12) <= 1e-14);

  // g12 vanishes on the symmetry axis for any theta1.
  for (double t1 : {0.3, 1.7, 5.0, 20.0}) {
    CHECK(std::fabs(fisher({t1, 0.0}).g12) <= 1e-14);
  }
}

TEST_CASE("fisher matrix is positive definite with consistent inverse") {
  for (const ThetaPoint& p : kGrid) {
    const FisherMatrix g = fisher(p);
    CHECK(g.g11 > 0.0);
    CHECK(g.det > 0.0);
    // det equals the 2x2 determinant of the entries.
    CHECK(g.det ==
          doctest::Approx(g.g11 * g.g22 - g.g12 * g.g12).epsilon(1e-11));
    // G * G^-1 = I
    CHECK(g.g11 * g.inv11 + g.g12 * g.inv12 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g.g12 * g.inv12 + g.g22 * g.inv22 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::fabs(g.g11 * g.inv12 + g.g12 * g.inv22) <= 1e-12 * g.cond);
    CHECK(g.cond >= 1.0);
  }
  CHECK_THROWS_AS((void)fisher({1.0, 1.0}), std::domain_error);
}

TEST_CASE("fisher equals the Hessian of the potential") {
  // Five well-separated points spanning the domain; Richardson-extrapolated
  // central differences keep the truncation error under the 1e-7 budget.
  const std::vector<ThetaPoint> pts = {
      {1.0, 0.0}, {2.0, 0.5}, {3.0, -1.0}, {5.0, 2.0}, {8.0, -3.0}};
  auto phi = [](const ThetaPoint& q) { return potential(q); };
  for (const ThetaPoint& p : pts) {
    auto hess = [&](double h, double& d11, double& d12, double& d22) {
      d11 = (phi({p.theta1 + h, p.theta2}) - 2.0 * phi(p) +
             phi({p.theta1 - h, p.theta2})) /
            (h * h);
      d22 = (phi({p.theta1, p.theta2 + h}) - 2.0 * phi(p) +
             phi({p.theta1, p.theta2 - h})) /
            (h * h);
      d12 = (phi({p.theta1 + h, p.theta2 + h}) -
             phi({p.theta1 + h, p.theta2 - h}) -
             phi({p.theta1 - h, p.theta2 + h}) +
             phi({p.theta1 - h, p.theta2 - h})) /
            (4.0 * h * h);
    };
    double a11, a12, a22, b11, b12, b22;
    const double h = 1e-3;
    hess(h, a11, a12, a22);
    hess(0.5 * h, b11, b12, b22);
    const double d11 = (4.0 * b11 - a11) / 3.0;
    const double d12 = (4.0 * b12 - a12) / 3.0;
    const double d22 = (4.0 * b22 - a22) / 3.0;
    const FisherMatrix g = fisher(p);
    CHECK(std::fabs(g.g11 - d11) <= 1e-7);
    CHECK(std::fabs(g.g22 - d22) <= 1e-7);
    CHECK(std::fabs(g.g12 - d12) <= 1e-7);
  }
}

TEST_CASE("near the boundary the metric stays defined and flags itself") {
  // psi' blows up like 2/(t1 -+ t2)^2 toward the wedge wall; values remain
  // finite and the condition number carries the warning.
  const FisherMatrix g = fisher({1.0, 1.0 - 1e-5});
  CHECK(std::isfinite(g.g11));
  CHECK(std::isfinite(g.det));
  CHECK(g.det > 0.0);
  CHECK(g.cond > 1e6);
  const FisherMatrix far = fisher({2.0, 0.0});
  CHECK(far.cond < 100.0);
}

TEST_CASE("cubic tensor symmetry properties and values") {
  // T112 vanishes on the symmetry axis.
  for (double t1 : {0.4, 1.0, 2.0, 9.0}) {
    const TTensor t = t_tensor({t1, 0.0});
    CHECK(std::fabs(t.t112) <= 1e-14);
    CHECK(t.t222 == t.t112);
  }
  // T122 at (2,0) is psi''(1)/4 = -zeta(3)/2.
  const TTensor t20 = t_tensor({2.0, 0.0});
  CHECK(t20.t122 ==
        doctest::Approx(-0.5 * specfun::riemann_zeta(3.0)).epsilon(1e-12));
  // Index accessor is totally symmetric.
  const TTensor t = t_tensor({3.0, 1.0});
  CHECK(t(1, 1, 2) == t(1, 2, 1));
  CHECK(t(1, 1, 2) == t(2, 1, 1));
  CHECK(t(2, 2, 1) == t(1, 2, 2));
}

TEST_CASE("T222 = T112 validated against third differences of phi") {
  // The connection table groups Gamma_222 with the Gamma_112 family, which
  // forces T222 = T112; check that against d^3 phi / d t2^3 directly.
  for (const ThetaPoint& p : {ThetaPoint{2.0, 0.7}, ThetaPoint{4.0, -2.1}}) {
    const double h = 2e-3;
    auto phi2 = [&](double dt2) {
      return potential({p.theta1, p.theta2 + dt2});
    };
    const double d222 = (phi2(2.0 * h) - 2.0 * phi2(h) + 2.0 * phi2(-h) -
                         phi2(-2.0 * h)) /
                        (2.0 * h * h * h);
    const TTensor t = t_tensor(p);
    CHECK(t.t222 == doctest::Approx(d222).epsilon(1e-5));
    CHECK(t.t112 == t.t222);
  }
}

TEST_CASE("cubic tensor matches quadrature of the score moments") {
  for (const ThetaPoint& p : {ThetaPoint{2.0, 0.0}, ThetaPoint{3.0, 1.0}}) {
    double lo, hi;
    support_bounds(p, 3, lo, hi);
    QuadratureSpec spec;
    spec.abs_tol = 1e-13;
    spec.rel_tol = 1e-12;
    const double phi = potential(p);
    auto dens = [&](double x) {
      return std::exp(p.theta1 * log_sech(x) + p.theta2 * x - phi);
    };
    auto expect = [&](auto&& fn) {
      return integrate([&](double x) { return fn(x) * dens(x); }, lo, hi, spec)
          .value;
    };
    const double m1 = expect([](double x) { return log_sech(x); });
    const double m2 = expect([](double x) { return x; });
    const TTensor t = t_tensor(p);
    const double q112 = expect([&](double x) {
      return (log_sech(x) - m1) * (log_sech(x) - m1) * (x - m2);
    });
    const double q222 =
        expect([&](double x) { return std::pow(x - m2, 3.0); });
    CHECK(std::fabs(t.t112 - q112) <= 1e-7);
    CHECK(std::fabs(t.t222 - q222) <= 1e-7);
  }
}

TEST_CASE("connection coefficients") {
  // Exponential connection vanishes in natural coordinates.
  for (const ThetaPoint& p : kGrid) {
    const ConnectionField c = connection(p, 1.0);
    CHECK(c.lower111 == 0.0);
    CHECK(c.lower112 == 0.0);
    CHECK(c.lower122 == 0.0);
    CHECK(c.lower222 == 0.0);
    CHECK(c.raised1_11 == 0.0);
    CHECK(c.raised2_22 == 0.0);
  }

  // Gamma_111 at (2,0), alpha=0: (12 zeta(3) - 16)/16.
  const double z3 = specfun::riemann_zeta(3.0);
  CHECK(connection({2.0, 0.0}, 0.0).lower111 ==
        doctest::Approx((12.0 * z3 - 16.0) / 16.0).epsilon(1e-12));

  // Linearity in (1 - alpha).
  const ThetaPoint p{2.6, -0.9};
  const ConnectionField base = connection(p, 0.0);
  for (double alpha : {-1.0, -0.25, 0.5, 0.99}) {
    const ConnectionField c = connection(p, alpha);
    CHECK(c.lower111 ==
          doctest::Approx((1.0 - alpha) * base.lower111).epsilon(1e-13));
    CHECK(c.lower122 ==
          doctest::Approx((1.0 - alpha) * base.lower122).epsilon(1e-13));
  }

  // Raised form is the inverse-metric contraction of the lower form.
  const FisherMatrix g = fisher(p);
  const ConnectionField c0 = connection(p, 0.0);
  CHECK(c0.raised1_12 ==
        doctest::Approx(c0.lower112 * g.inv11 + c0.lower122 * g.inv12)
            .epsilon(1e-13));
  CHECK(c0.raised(2, 1, 2) ==
        doctest::Approx(c0.lower(1, 2, 1) * g.inv12 + c0.lower(1, 2, 2) * g.inv22)
            .epsilon(1e-13));
}

TEST_CASE("curvature closed forms at the Bernoulli and Euler points") {
  const double z3 = specfun::riemann_zeta(3.0);
  const double pi2 = kPi * kPi;

  const CurvatureReport e = curvature({1.0, 0.0}, 0.0);
  CHECK(e.r1212 == doctest::Approx(7.0 * z3 * z3 / (2.0 * pi2)).epsilon(1e-10));
  CHECK(e.scalar ==
        doctest::Approx(336.0 * z3 * z3 / (pi2 * pi2 * pi2)).epsilon(1e-10));

  const CurvatureReport b = curvature({2.0, 0.0}, 0.0);
  const double num = z3 * (6.0 * z3 + pi2 * z3 - 2.0 * pi2);
  CHECK(b.scalar ==
        doctest::Approx(-432.0 * num / (pi2 * pi2 * (pi2 - 12.0) * (pi2 - 12.0)))
            .epsilon(1e-10));
}

TEST_CASE("plus-minus-one flatness") {
  for (const ThetaPoint& p : kGrid) {
    for (double alpha : {-1.0, 1.0}) {
      const CurvatureReport r = curvature(p, alpha);
      CHECK(std::fabs(r.r1212) <= 1e-12);
      CHECK(std::fabs(r.ricci11) <= 1e-12);
      CHECK(std::fabs(r.ricci12) <= 1e-12);
      CHECK(std::fabs(r.ricci22) <= 1e-12);
      CHECK(std::fabs(r.scalar) <= 1e-12);
      CHECK(std::fabs(r.gaussian) <= 1e-12);
    }
  }
}

TEST_CASE("scalar curvature scales as (1 - alpha^2)") {
  for (const ThetaPoint& p : kGrid) {
    const double base = curvature(p, 0.0).scalar;
    for (double alpha : {-1.0, -0.5, 0.5, 1.0}) {
      const double expected = (1.0 - alpha * alpha) * base;
      const double got = curvature(p, alpha).scalar;
      if (expected == 0.0) {
        CHECK(std::fabs(got) <= 1e-12);
      } else {
        CHECK(got == doctest::Approx(expected).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("explicit curvature agrees with the cubic-tensor contraction") {
  for (const ThetaPoint& p : kGrid) {
    for (double alpha : {-0.5, 0.0, 0.7}) {
      const CurvatureReport a = curvature(p, alpha);
      const CurvatureReport c = curvature_via_t_tensor(p, alpha);
      CHECK(a.r1212 == doctest::Approx(c.r1212).epsilon(1e-10));
      CHECK(a.ricci11 == doctest::Approx(c.ricci11).epsilon(1e-10));
      CHECK(a.ricci22 == doctest::Approx(c.ricci22).epsilon(1e-10));
      CHECK(a.scalar == doctest::Approx(c.scalar).epsilon(1e-10));
      if (std::fabs(a.ricci12) > 1e-12) {
        CHECK(a.ricci12 == doctest::Approx(c.ricci12).epsilon(1e-10));
      } else {
        CHECK(std::fabs(c.ricci12) <= 1e-12);
      }
    }
  }
}

TEST_CASE("report invariants: scalar = 2K and scalar = 8 R1212 / script-G") {
  for (const ThetaPoint& p : kGrid) {
    const CurvatureReport r = curvature(p, 0.25);
    CHECK(r.scalar == doctest::Approx(2.0 * r.gaussian).epsilon(1e-12));
    const double script_g = 4.0 * fisher(p).det;
    if (r.scalar != 0.0) {
      CHECK(r.scalar ==
            doctest::Approx(8.0 * r.r1212 / script_g).epsilon(1e-12));
    }
  }
}

TEST_CASE("Corollary Gaussian curvature formula") {
  for (const ThetaPoint& p : kGrid) {
    CHECK(gaussian_curvature_riemannian(p) ==
          doctest::Approx(curvature(p, 0.0).gaussian).epsilon(1e-10));
    // Even in theta2.
    CHECK(gaussian_curvature_riemannian(p) ==
          doctest::Approx(gaussian_curvature_riemannian({p.theta1, -p.theta2}))
              .epsilon(1e-13));
  }
  // K at the Euler point: 168 zeta(3)^2 / pi^6.
  const double z3 = specfun::riemann_zeta(3.0);
  CHECK(gaussian_curvature_riemannian({1.0, 0.0}) ==
        doctest::Approx(168.0 * z3 * z3 / std::pow(kPi, 6.0)).epsilon(1e-10));
}
