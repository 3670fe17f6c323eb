#include "betalog/geodesics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "betalog/geometry.hpp"
#include "betalog/specfun.hpp"

namespace betalog {

double metric_speed_squared(const ThetaPoint& p,
                            const std::array<double, 2>& v) {
  const FisherMatrix g = fisher(p);
  return g.g11 * v[0] * v[0] + 2.0 * g.g12 * v[0] * v[1] +
         g.g22 * v[1] * v[1];
}

std::array<double, 2> geodesic_rhs(const GeodesicState& s) {
  const ConnectionField c = connection(s.theta, 0.0);
  const double v1 = s.velocity[0];
  const double v2 = s.velocity[1];
  return {-(c.raised1_11 * v1 * v1 + 2.0 * c.raised1_12 * v1 * v2 +
            c.raised1_22 * v2 * v2),
          -(c.raised2_11 * v1 * v1 + 2.0 * c.raised2_12 * v1 * v2 +
            c.raised2_22 * v2 * v2)};
}

std::array<double, 2> geodesic_rhs_explicit(const GeodesicState& s) {
  require_domain(s.theta);
  const double lo = 0.5 * (s.theta.theta1 - s.theta.theta2);
  const double hi = 0.5 * (s.theta.theta1 + s.theta.theta2);
  const double s_lo = specfun::polygamma(1, lo);
  const double s_hi = specfun::polygamma(1, hi);
  const double s_mid = specfun::polygamma(1, s.theta.theta1);
  const double p_lo = specfun::polygamma(2, lo);
  const double p_hi = specfun::polygamma(2, hi);
  const double p_mid = specfun::polygamma(2, s.theta.theta1);
  const double g = s_lo * s_hi - s_mid * (s_lo + s_hi);

  const double v1 = s.velocity[0];
  const double v2 = s.velocity[1];

  // First displayed equation: d2theta1 = A1 v1^2 - B1 v1 v2 - C1 v2^2.
  const double a1 = (s_hi * (4.0 * p_mid - p_lo) + s_lo * (4.0 * p_mid - p_hi)) /
                    (8.0 * g);
  const double b1 = (p_hi * s_lo - p_lo * s_hi) / (4.0 * g);
  const double c1 = (p_lo * s_hi + p_hi * s_lo) / (8.0 * g);

  // Second displayed equation: d2theta2 = -(A2 v1^2 + B2 v1 v2 + C2 v2^2).
  const double a2 = s_hi * (4.0 * p_mid - p_lo) / (8.0 * g) +
                    (p_lo - p_hi) * s_mid / (4.0 * g) +
                    (p_hi - 4.0 * p_mid) * s_lo / (8.0 * g);
  const double b2 = (p_lo * (s_hi - 2.0 * s_mid) + p_hi * (s_lo - 2.0 * s_mid)) /
                    (4.0 * g);
  const double c2 = (p_lo * (2.0 * s_mid - s_hi) + p_hi * (s_lo - 2.0 * s_mid)) /
                    (8.0 * g);

  return {a1 * v1 * v1 - b1 * v1 * v2 - c1 * v2 * v2,
          -(a2 * v1 * v1 + b2 * v1 * v2 + c2 * v2 * v2)};
}

std::array<double, 2> unit_speed_velocity(const ThetaPoint& origin,
                                          double angle) {
  const FisherMatrix g = fisher(origin);
  // G = L L^T, then v = L^-T e gives v^T G v = |e|^2.
  const double l11 = std::sqrt(g.g11);
  const double l21 = g.g12 / l11;
  const double l22 = std::sqrt(g.g22 - l21 * l21);
  const double e1 = std::cos(angle);
  const double e2 = std::sin(angle);
  const double v2 = e2 / l22;
  const double v1 = (e1 - l21 * v2) / l11;
  return {v1, v2};
}

namespace {

// Dormand-Prince RK5(4)7M coefficients.
constexpr double kA[7][6] = {
    {},
    {1.0 / 5.0},
    {3.0 / 40.0, 9.0 / 40.0},
    {44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0},
    {19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0},
    {9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0,
     -5103.0 / 18656.0},
    {35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0,
     11.0 / 84.0}};
constexpr double kB5[7] = {35.0 / 384.0,    0.0,  500.0 / 1113.0,
                           125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0, 0.0};
constexpr double kB4[7] = {5179.0 / 57600.0,    0.0,
                           7571.0 / 16695.0,    393.0 / 640.0,
                           -92097.0 / 339200.0, 187.0 / 2100.0,
                           1.0 / 40.0};

using Vec4 = std::array<double, 4>;

bool point_in_domain(const Vec4& y) {
  return ThetaPoint{y[0], y[1]}.in_domain();
}

Vec4 rhs(const Vec4& y) {
  GeodesicState s;
  s.theta = {y[0], y[1]};
  s.velocity = {y[2], y[3]};
  const auto acc = geodesic_rhs(s);
  return {y[2], y[3], acc[0], acc[1]};
}

GeodesicState to_state(double t, const Vec4& y) {
  GeodesicState s;
  s.t = t;
  s.theta = {y[0], y[1]};
  s.velocity = {y[2], y[3]};
  return s;
}

constexpr double kBoundaryLocalization = 1e-10;
constexpr double kMinStep = 1e-14;

}  // namespace

GeodesicPath integrate_geodesic(const GeodesicState& start, double t_end,
                                double rel_tol, double abs_tol,
                                std::span<const double> checkpoints) {
  require_domain(start.theta);
  if (!(t_end > start.t)) {
    throw std::domain_error("integrate_geodesic requires t_end > start.t");
  }
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
    throw std::domain_error("integrate_geodesic requires positive tolerances");
  }

  GeodesicPath path;
  double t = start.t;
  Vec4 y = {start.theta.theta1, start.theta.theta2, start.velocity[0],
            start.velocity[1]};
  path.states.push_back(to_state(t, y));

  std::size_t next_checkpoint = 0;
  while (next_checkpoint < checkpoints.size() &&
         checkpoints[next_checkpoint] <= t) {
    ++next_checkpoint;
  }

  Vec4 k[7];
  k[0] = rhs(y);

  double h = std::min(1e-3, t_end - t);
  double err_old = 1e-4;  // PI controller memory

  // Boundary-channel geodesics escape to infinite coordinates in finite
  // affine time and force the step size toward zero; once error-driven
  // steps fall below this floor the integration cannot make meaningful
  // further progress and stops as step_underflow.
  const double h_floor = std::max(1e-12, 1e-6 * (t_end - start.t));

  const long max_steps = 20'000'000;
  for (long step = 0; step < max_steps && t < t_end;) {
    double h_try = std::min(h, t_end - t);
    if (next_checkpoint < checkpoints.size()) {
      h_try = std::min(h_try, checkpoints[next_checkpoint] - t);
    }
    const bool clamped = h_try < h;

    // Stage evaluations; a stage outside the open domain rejects the step.
    bool out_of_domain = false;
    Vec4 y_stage;
    for (int i = 1; i < 7 && !out_of_domain; ++i) {
      for (int d = 0; d < 4; ++d) {
        double acc = 0.0;
        for (int j = 0; j < i; ++j) acc += kA[i][j] * k[j][d];
        y_stage[d] = y[d] + h_try * acc;
      }
      if (!point_in_domain(y_stage)) {
        out_of_domain = true;
        break;
      }
      k[i] = rhs(y_stage);
    }

    Vec4 y5, y4;
    if (!out_of_domain) {
      for (int d = 0; d < 4; ++d) {
        double acc5 = 0.0, acc4 = 0.0;
        for (int j = 0; j < 7; ++j) {
          acc5 += kB5[j] * k[j][d];
          acc4 += kB4[j] * k[j][d];
        }
        y5[d] = y[d] + h_try * acc5;
        y4[d] = y[d] + h_try * acc4;
      }
      if (!point_in_domain(y5)) out_of_domain = true;
    }

    if (out_of_domain) {
      // Bisect toward the boundary; the metric is singular there, so the
      // path ends once the crossing is localized.
      if (h_try <= kBoundaryLocalization) {
        path.termination = Termination::domain_boundary;
        return path;
      }
      h = 0.5 * h_try;
      continue;
    }

    double err = 0.0;
    for (int d = 0; d < 4; ++d) {
      const double scale =
          abs_tol + rel_tol * std::max(std::fabs(y[d]), std::fabs(y5[d]));
      const double e = (y5[d] - y4[d]) / scale;
      err += e * e;
    }
    err = std::sqrt(err / 4.0);

    if (err <= 1.0) {
      t += h_try;
      y = y5;
      k[0] = k[6];  // FSAL
      path.states.push_back(to_state(t, y));
      ++step;
      while (next_checkpoint < checkpoints.size() &&
             checkpoints[next_checkpoint] <= t + 1e-13) {
        ++next_checkpoint;
      }
      if (!clamped) {
        // PI controller (Hairer's dopri5 constants).
        const double err_clamped = std::max(err, 1e-10);
        double fac =
            0.9 * std::pow(err_clamped, -0.17) * std::pow(err_old, 0.04);
        fac = std::clamp(fac, 0.2, 5.0);
        h = h_try * fac;
        err_old = err_clamped;
        if (h < h_floor && t < t_end) {
          path.termination = Termination::step_underflow;
          return path;
        }
      }
    } else {
      h = h_try * std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9);
      if (h < kMinStep || (!clamped && h < h_floor)) {
        path.termination = Termination::step_underflow;
        return path;
      }
    }
  }

  path.termination =
      t >= t_end ? Termination::time_reached : Termination::step_underflow;
  return path;
}

std::vector<GeodesicPath> geodesic_bundle(const ThetaPoint& origin,
                                          int directions, double t_end,
                                          double rel_tol, double abs_tol) {
  if (directions < 1) {
    throw std::domain_error("geodesic_bundle requires directions >= 1");
  }
  std::vector<GeodesicPath> paths;
  paths.reserve(directions);
  for (int i = 0; i < directions; ++i) {
    // Signed angles so that directions i and n-i get exactly mirrored
    // launch velocities (libm sine is odd to the last bit); on symmetric
    // origins the two paths then mirror identically in theta2.
    const int signed_i = 2 * i <= directions ? i : i - directions;
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(signed_i) / directions;
    GeodesicState start;
    start.theta = origin;
    start.velocity = unit_speed_velocity(origin, angle);
    paths.push_back(integrate_geodesic(start, t_end, rel_tol, abs_tol));
  }
  return paths;
}

SpreadReport spread_diagnostic(const ThetaPoint& origin, double base_angle,
                               double perturbation, double t_end,
                               double rel_tol, double abs_tol) {
  constexpr int kSamples = 64;
  std::vector<double> ts(kSamples);
  for (int i = 0; i < kSamples; ++i) {
    ts[i] = t_end * static_cast<double>(i) / (kSamples - 1);
  }

  GeodesicState fiducial;
  fiducial.theta = origin;
  fiducial.velocity = unit_speed_velocity(origin, base_angle);
  GeodesicState perturbed;
  perturbed.theta = origin;
  perturbed.velocity = unit_speed_velocity(origin, base_angle + perturbation);

  const std::span<const double> cps(ts.data() + 1, ts.size() - 1);
  const GeodesicPath a = integrate_geodesic(fiducial, t_end, rel_tol, abs_tol, cps);
  const GeodesicPath b = integrate_geodesic(perturbed, t_end, rel_tol, abs_tol, cps);

  SpreadReport report;
  std::size_t ia = 0, ib = 0;
  for (double tq : ts) {
    // Advance to the recorded state at tq on both paths, if present.
    while (ia < a.states.size() && a.states[ia].t < tq - 1e-12) ++ia;
    while (ib < b.states.size() && b.states[ib].t < tq - 1e-12) ++ib;
    if (ia >= a.states.size() || ib >= b.states.size()) break;
    if (std::fabs(a.states[ia].t - tq) > 1e-9 ||
        std::fabs(b.states[ib].t - tq) > 1e-9) {
      break;  // one of the paths ended before this sample time
    }
    const ThetaPoint& pa = a.states[ia].theta;
    const ThetaPoint& pb = b.states[ib].theta;
    const std::array<double, 2> d = {pb.theta1 - pa.theta1,
                                     pb.theta2 - pa.theta2};
    report.times.push_back(tq);
    report.separations.push_back(std::sqrt(metric_speed_squared(pa, d)));
  }
  return report;
}

}  // namespace betalog
