#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "betalog/distribution.hpp"
#include "betalog/geometry.hpp"
#include "betalog/inference.hpp"

using namespace betalog;
constexpr double kPi = std::numbers::pi;

TEST_CASE("sufficient statistics") {
  const std::vector<double> single = {0.0};
  const SufficientStats s0 = suff_stats(single);
  CHECK(s0.n == 1);
  CHECK(s0.log_a == 0.0);
  CHECK(s0.b == 0.0);

  const std::vector<double> pair = {1.0, -1.0};
  const SufficientStats s1 = suff_stats(pair);
  CHECK(s1.n == 2);
  CHECK(s1.log_a == doctest::Approx(-0.86756166096605437).epsilon(1e-14));
  CHECK(s1.b == 0.0);
  CHECK(s1.log_a <= 0.0);

  // Permutation invariance (compensated sums, same multiset).
  std::vector<double> xs = {0.3, -1.7, 2.5, 0.01, -0.4, 5.5};
  const SufficientStats a = suff_stats(xs);
  std::ranges::sort(xs);
  const SufficientStats b = suff_stats(xs);
  CHECK(a.b == doctest::Approx(b.b).epsilon(1e-15));
  CHECK(a.log_a == doctest::Approx(b.log_a).epsilon(1e-15));

  CHECK_THROWS_AS((void)suff_stats(std::vector<double>{}), std::domain_error);
}

TEST_CASE("alpha-parallel prior") {
  // alpha = 1: improper flat prior, exactly zero.
  CHECK(alpha_prior_log({3.7, 1.1}, 1.0) == 0.0);
  // alpha = 0 (Jeffreys) at the Bernoulli point.
  const double det = (1.0 - kPi * kPi / 12.0) * (kPi * kPi / 12.0);
  CHECK(alpha_prior_log({2.0, 0.0}, 0.0) ==
        doctest::Approx(0.5 * std::log(det)).epsilon(1e-12));
  // alpha = -1: ln det G.
  CHECK(alpha_prior_log({2.0, 0.0}, -1.0) ==
        doctest::Approx(std::log(fisher({2.0, 0.0}).det)).epsilon(1e-13));
  // Affine in alpha with slope -ln det G / 2.
  const ThetaPoint p{1.4, -0.6};
  const double slope = -0.5 * std::log(fisher(p).det);
  for (double alpha : {-2.0, -1.0, 0.0, 0.5, 2.0}) {
    CHECK(alpha_prior_log(p, alpha) ==
          doctest::Approx(alpha_prior_log(p, 0.0) + slope * alpha)
              .epsilon(1e-12));
  }
}

TEST_CASE("posterior gradient matches finite differences") {
  const auto data = sample({2.0, 0.5}, 60, 2024);
  const SufficientStats s = suff_stats(data);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    const double t1 = 0.8 + 3.0 * u(rng);
    const double t2 = (2.0 * u(rng) - 1.0) * 0.8 * t1;
    const ThetaPoint p{t1, t2};
    for (double alpha : {-1.0, 0.3, 1.0}) {
      const auto g = posterior_gradient(s, p, alpha);
      const double h = 1e-6;
      const double fd1 =
          (log_posterior_unnorm(s, {t1 + h, t2}, alpha) -
           log_posterior_unnorm(s, {t1 - h, t2}, alpha)) /
          (2.0 * h);
      const double fd2 =
          (log_posterior_unnorm(s, {t1, t2 + h}, alpha) -
           log_posterior_unnorm(s, {t1, t2 - h}, alpha)) /
          (2.0 * h);
      CHECK(std::fabs(g[0] - fd1) <= 1e-7 * std::max(1.0, std::fabs(fd1)));
      CHECK(std::fabs(g[1] - fd2) <= 1e-7 * std::max(1.0, std::fabs(fd2)));
    }
  }
}

TEST_CASE("ln det G gradient matches finite differences") {
  for (const ThetaPoint& p : {ThetaPoint{1.5, 0.2}, ThetaPoint{4.0, -2.5}}) {
    const auto g = log_det_fisher_gradient(p);
    const double h = 1e-6;
    auto ldg = [](const ThetaPoint& q) { return std::log(fisher(q).det); };
    const double fd1 =
        (ldg({p.theta1 + h, p.theta2}) - ldg({p.theta1 - h, p.theta2})) /
        (2.0 * h);
    const double fd2 =
        (ldg({p.theta1, p.theta2 + h}) - ldg({p.theta1, p.theta2 - h})) /
        (2.0 * h);
    CHECK(g[0] == doctest::Approx(fd1).epsilon(1e-7));
    CHECK(g[1] == doctest::Approx(fd2).epsilon(1e-7));
  }
}

TEST_CASE("symmetric data: gradient component 2 vanishes on the axis") {
  const std::vector<double> xs = {0.4, -0.4, 1.3, -1.3, 2.0, -2.0};
  const SufficientStats s = suff_stats(xs);
  REQUIRE(s.b == 0.0);
  for (double t1 : {0.9, 2.0, 5.5}) {
    const auto g = posterior_gradient(s, {t1, 0.0}, 1.0);
    CHECK(std::fabs(g[1]) <= 1e-13);
  }
  // And the alpha = 1 estimate lands on the axis.
  const MapEstimate est = map_estimate(s, 1.0);
  CHECK(est.converged);
  CHECK(std::fabs(est.theta_hat.theta2) <= 1e-6);
}

TEST_CASE("MAP estimation recovers the generator and the grid argmax") {
  const auto data = sample({3.0, 1.0}, 200, 9);
  const SufficientStats s = suff_stats(data);
  for (double alpha : {-1.0, 0.0, 1.0}) {
    const MapEstimate est = map_estimate(s, alpha);
    CHECK(est.converged);
    CHECK(est.grad_norm <= 1e-8);
    CHECK(est.theta_hat.in_domain());

    double best = -1e300;
    double b1 = 0.0, b2 = 0.0;
    for (int i = 0; i <= 200; ++i) {
      for (int j = 0; j <= 200; ++j) {
        const ThetaPoint p{2.0 + 0.01 * i, 0.01 * j};
        if (!p.in_domain()) continue;
        const double v = log_posterior_unnorm(s, p, alpha);
        if (v > best) {
          best = v;
          b1 = p.theta1;
          b2 = p.theta2;
        }
      }
    }
    CHECK(std::fabs(est.theta_hat.theta1 - b1) <= 0.01);
    CHECK(std::fabs(est.theta_hat.theta2 - b2) <= 0.01);
  }
}

TEST_CASE("alpha sweep varies smoothly and hits the MLE at alpha = 1") {
  const auto data = sample({2.5, -0.7}, 500, 11);
  const SufficientStats s = suff_stats(data);
  double prev1 = 0.0;
  bool first = true;
  for (double alpha : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    const MapEstimate est = map_estimate(s, alpha);
    CHECK(est.converged);
    if (!first) CHECK(std::fabs(est.theta_hat.theta1 - prev1) <= 0.2);
    prev1 = est.theta_hat.theta1;
    first = false;
  }
  // Prior term is identically zero at alpha = 1, so the MAP objective is
  // the likelihood itself.
  const MapEstimate mle = map_estimate(s, 1.0);
  const auto grad = posterior_gradient(s, mle.theta_hat, 1.0);
  CHECK(std::hypot(grad[0], grad[1]) <= 1e-8);
  CHECK(log_posterior_unnorm(s, mle.theta_hat, 1.0) ==
        doctest::Approx(mle.log_post_unnorm).epsilon(1e-12));
}

TEST_CASE("objective increases along accepted iterations") {
  const auto data = sample({1.2, 0.3}, 80, 5);
  const SufficientStats s = suff_stats(data);
  SolverConfig cfg;
  cfg.init = ThetaPoint{6.0, -3.0};  // deliberately poor start
  const MapEstimate est = map_estimate(s, 0.0, cfg);
  CHECK(est.converged);
  CHECK(est.log_post_unnorm >=
        log_posterior_unnorm(s, *cfg.init, 0.0));
}

TEST_CASE("degenerate and invalid inputs") {
  const std::vector<double> same = {1.3, 1.3, 1.3, 1.3};
  const SufficientStats s = suff_stats(same);
  SolverConfig cfg;
  cfg.max_iter = 40;
  const MapEstimate est = map_estimate(s, 1.0, cfg);
  CHECK(est.degenerate_data);

  // A single observation: the solver must report non-convergence rather
  // than fail, and every iterate stays in the domain.
  const std::vector<double> one = {0.7};
  const MapEstimate single = map_estimate(suff_stats(one), 1.0, cfg);
  CHECK(single.theta_hat.in_domain());
  CHECK_FALSE(single.converged);

  const auto ok = sample({2.0, 0.0}, 50, 3);
  const SufficientStats good = suff_stats(ok);
  CHECK_FALSE(map_estimate(good, 0.0).degenerate_data);

  SolverConfig bad;
  bad.grad_tol = 0.0;
  CHECK_THROWS_AS((void)map_estimate(good, 0.0, bad), std::domain_error);
  bad = {};
  bad.backtrack_ratio = 1.0;
  CHECK_THROWS_AS((void)map_estimate(good, 0.0, bad), std::domain_error);
}
