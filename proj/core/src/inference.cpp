#include "betalog/inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "betalog/distribution.hpp"
#include "betalog/geometry.hpp"
#include "betalog/specfun.hpp"

namespace betalog {

namespace {
constexpr double kLn2 = std::numbers::ln2;
}

SufficientStats suff_stats(std::span<const double> xs) {
  if (xs.empty()) throw std::domain_error("suff_stats requires observations");
  SufficientStats s;
  s.n = xs.size();
  double sum_b = 0.0, comp_b = 0.0;
  double sum_a = 0.0, comp_a = 0.0;
  for (double x : xs) {
    // Kahan compensation on both running sums.
    double yb = x - comp_b;
    double tb = sum_b + yb;
    comp_b = (tb - sum_b) - yb;
    sum_b = tb;

    double ya = log_sech(x) - comp_a;
    double ta = sum_a + ya;
    comp_a = (ta - sum_a) - ya;
    sum_a = ta;
  }
  s.b = sum_b;
  s.log_a = sum_a;
  return s;
}

double alpha_prior_log(const ThetaPoint& p, double alpha) {
  require_domain(p);
  if (alpha == 1.0) return 0.0;
  return 0.5 * (1.0 - alpha) * std::log(fisher(p).det);
}

double log_posterior_unnorm(const SufficientStats& s, const ThetaPoint& p,
                            double alpha) {
  require_domain(p);
  const double n = static_cast<double>(s.n);
  const double lo = 0.5 * (p.theta1 - p.theta2);
  const double hi = 0.5 * (p.theta1 + p.theta2);
  const double likelihood = n * (1.0 - p.theta1) * kLn2 +
                            p.theta1 * s.log_a + p.theta2 * s.b -
                            n * specfun::log_beta(lo, hi);
  return likelihood + alpha_prior_log(p, alpha);
}

std::array<double, 2> log_det_fisher_gradient(const ThetaPoint& p) {
  require_domain(p);
  const double lo = 0.5 * (p.theta1 - p.theta2);
  const double hi = 0.5 * (p.theta1 + p.theta2);
  const double s_lo = specfun::polygamma(1, lo);
  const double s_hi = specfun::polygamma(1, hi);
  const double s_mid = specfun::polygamma(1, p.theta1);
  const double p_lo = specfun::polygamma(2, lo);
  const double p_hi = specfun::polygamma(2, hi);
  const double p_mid = specfun::polygamma(2, p.theta1);
  const double g = s_lo * s_hi - s_mid * (s_lo + s_hi);

  // d1 script-G and d2 script-G by the product rule
  // (d/dtheta1 psi'(lo or hi) = psi''/2; d/dtheta2 flips the sign on lo).
  const double d1 = 0.5 * p_lo * s_hi + 0.5 * s_lo * p_hi -
                    p_mid * (s_lo + s_hi) - 0.5 * s_mid * (p_lo + p_hi);
  const double d2 = -0.5 * p_lo * s_hi + 0.5 * s_lo * p_hi -
                    0.5 * s_mid * (p_hi - p_lo);
  return {d1 / g, d2 / g};
}

std::array<double, 2> posterior_gradient(const SufficientStats& s,
                                         const ThetaPoint& p, double alpha) {
  require_domain(p);
  const double n = static_cast<double>(s.n);
  const double lo = 0.5 * (p.theta1 - p.theta2);
  const double hi = 0.5 * (p.theta1 + p.theta2);
  const double psi_lo = specfun::digamma(lo);
  const double psi_hi = specfun::digamma(hi);
  const double psi_mid = specfun::digamma(p.theta1);

  double g1 = s.log_a - n * kLn2 -
              0.5 * n * (psi_hi + psi_lo - 2.0 * psi_mid);
  double g2 = s.b - 0.5 * n * (psi_hi - psi_lo);
  if (alpha != 1.0) {
    const auto dld = log_det_fisher_gradient(p);
    g1 += 0.5 * (1.0 - alpha) * dld[0];
    g2 += 0.5 * (1.0 - alpha) * dld[1];
  }
  return {g1, g2};
}

namespace {

// Hessian of the log posterior in theta coordinates: the likelihood block is
// -N G (Hessian of the potential), the prior block is a central-difference
// Hessian of ln det G taken on its analytic gradient.
std::array<double, 3> posterior_hessian(const SufficientStats& s,
                                        const ThetaPoint& p, double alpha) {
  const double n = static_cast<double>(s.n);
  const FisherMatrix g = fisher(p);
  double h11 = -n * g.g11;
  double h12 = -n * g.g12;
  double h22 = -n * g.g22;
  if (alpha != 1.0) {
    const double w = 0.5 * (1.0 - alpha);
    const double margin = std::min(p.theta1 - p.theta2, p.theta1 + p.theta2);
    const double step = std::min(1e-5 * std::max(1.0, std::fabs(p.theta1)),
                                 0.25 * margin);
    const auto gp1 = log_det_fisher_gradient({p.theta1 + step, p.theta2});
    const auto gm1 = log_det_fisher_gradient({p.theta1 - step, p.theta2});
    const auto gp2 = log_det_fisher_gradient({p.theta1, p.theta2 + step});
    const auto gm2 = log_det_fisher_gradient({p.theta1, p.theta2 - step});
    h11 += w * (gp1[0] - gm1[0]) / (2.0 * step);
    h22 += w * (gp2[1] - gm2[1]) / (2.0 * step);
    h12 += w * 0.5 *
           ((gp1[1] - gm1[1]) / (2.0 * step) + (gp2[0] - gm2[0]) / (2.0 * step));
  }
  return {h11, h12, h22};
}

ThetaPoint from_log_coords(double u, double v) {
  const double a = std::exp(u);  // theta1 - theta2
  const double b = std::exp(v);  // theta1 + theta2
  return {0.5 * (a + b), 0.5 * (b - a)};
}

// Method-of-moments start: coarse grid matching of the mean and the
// mean log-sech against the corresponding potential derivatives.
ThetaPoint moment_matching_init(const SufficientStats& s) {
  const double n = static_cast<double>(s.n);
  const double mean_x = s.b / n;
  const double mean_ls = s.log_a / n;

  ThetaPoint best{2.0, 0.0};
  double best_score = std::numeric_limits<double>::infinity();
  for (double t1 : {0.35, 0.6, 1.0, 1.6, 2.5, 4.0, 6.0, 9.0, 14.0}) {
    for (double frac = -0.9; frac <= 0.91; frac += 0.15) {
      const ThetaPoint cand{t1, frac * t1};
      const double lo = 0.5 * (cand.theta1 - cand.theta2);
      const double hi = 0.5 * (cand.theta1 + cand.theta2);
      const double dphi1 = 0.5 * (specfun::digamma(hi) + specfun::digamma(lo)) -
                           specfun::digamma(cand.theta1) + kLn2;
      const double dphi2 = 0.5 * (specfun::digamma(hi) - specfun::digamma(lo));
      const double r1 = dphi1 - mean_ls;
      const double r2 = dphi2 - mean_x;
      const double score = r1 * r1 + r2 * r2;
      if (score < best_score) {
        best_score = score;
        best = cand;
      }
    }
  }
  return best;
}

}  // namespace

MapEstimate map_estimate(const SufficientStats& s, double alpha,
                         const SolverConfig& cfg) {
  if (s.n < 1) throw std::domain_error("map_estimate requires observations");
  if (!(cfg.grad_tol > 0.0)) {
    throw std::domain_error("map_estimate requires grad_tol > 0");
  }
  if (cfg.max_iter < 1) {
    throw std::domain_error("map_estimate requires max_iter >= 1");
  }
  if (!(cfg.backtrack_ratio > 0.0 && cfg.backtrack_ratio < 1.0)) {
    throw std::domain_error("map_estimate requires backtrack_ratio in (0,1)");
  }

  MapEstimate est;
  est.alpha = alpha;
  // ln sech is strictly concave, so log_a = n * ln sech(b/n) holds exactly
  // when every observation is equal. Such data pushes the MLE toward the
  // domain boundary and the solver reports non-convergence.
  {
    const double n = static_cast<double>(s.n);
    const double jensen_gap = n * log_sech(s.b / n) - s.log_a;
    est.degenerate_data = jensen_gap <= 1e-12 * std::max(1.0, std::fabs(s.log_a));
  }

  ThetaPoint p = cfg.init ? *cfg.init : moment_matching_init(s);
  require_domain(p);
  double u = std::log(p.theta1 - p.theta2);
  double v = std::log(p.theta1 + p.theta2);
  double value = log_posterior_unnorm(s, p, alpha);

  int iter = 0;
  for (; iter < cfg.max_iter; ++iter) {
    const auto grad_theta = posterior_gradient(s, p, alpha);
    est.grad_norm = std::hypot(grad_theta[0], grad_theta[1]);
    if (est.grad_norm <= cfg.grad_tol) {
      est.converged = true;
      break;
    }

    // Chain rule to (u, v): dtheta/du = (A/2, -A/2), dtheta/dv = (B/2, B/2).
    const double a = std::exp(u);
    const double b = std::exp(v);
    const double gu = 0.5 * a * (grad_theta[0] - grad_theta[1]);
    const double gv = 0.5 * b * (grad_theta[0] + grad_theta[1]);

    const auto ht = posterior_hessian(s, p, alpha);
    const double huu = 0.5 * a * (grad_theta[0] - grad_theta[1]) +
                       0.25 * a * a * (ht[0] - 2.0 * ht[1] + ht[2]);
    const double hvv = 0.5 * b * (grad_theta[0] + grad_theta[1]) +
                       0.25 * b * b * (ht[0] + 2.0 * ht[1] + ht[2]);
    const double huv = 0.25 * a * b * (ht[0] - ht[2]);

    // Newton direction when the Hessian is negative definite, else ascent.
    double su, sv;
    const double det = huu * hvv - huv * huv;
    if (huu < 0.0 && det > 0.0) {
      su = -(hvv * gu - huv * gv) / det;
      sv = -(-huv * gu + huu * gv) / det;
    } else {
      const double scale = 1.0 / std::max(1.0, std::hypot(gu, gv));
      su = gu * scale;
      sv = gv * scale;
    }

    // Backtracking line search; accepted steps never decrease the objective
    // beyond evaluation roundoff. The full step is also accepted when the
    // objective is flat at double resolution: near the optimum the remaining
    // Newton improvement drops below the evaluation noise while the gradient
    // still has digits to gain. The noise scale comes from the magnitudes of
    // the terms summed inside l, which cancel heavily for large N.
    const double term_magnitude =
        std::fabs(p.theta1 * s.log_a) + std::fabs(p.theta2 * s.b) +
        static_cast<double>(s.n) + std::fabs(value);
    const double flat_slack =
        64.0 * std::numeric_limits<double>::epsilon() * term_magnitude;
    double step = 1.0;
    bool moved = false;
    for (int bt = 0; bt < 60; ++bt, step *= cfg.backtrack_ratio) {
      const double u_try = u + step * su;
      const double v_try = v + step * sv;
      if (std::fabs(u_try) > 700.0 || std::fabs(v_try) > 700.0) continue;
      const ThetaPoint cand = from_log_coords(u_try, v_try);
      if (!cand.in_domain()) continue;  // exp() overflow edge cases
      const double value_try = log_posterior_unnorm(s, cand, alpha);
      if (value_try > value || (bt == 0 && value_try >= value - flat_slack)) {
        u = u_try;
        v = v_try;
        p = cand;
        value = value_try;
        moved = true;
        break;
      }
    }
    if (!moved) break;  // no admissible increase; report where we stopped
  }

  est.theta_hat = p;
  est.iterations = iter;
  est.log_post_unnorm = value;
  const auto grad_final = posterior_gradient(s, p, alpha);
  est.grad_norm = std::hypot(grad_final[0], grad_final[1]);
  est.converged = est.grad_norm <= cfg.grad_tol;
  return est;
}

}  // namespace betalog
