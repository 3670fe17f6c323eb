#pragma once

#include <array>
#include <span>
#include <vector>

#include "betalog/theta.hpp"

namespace betalog {

struct GeodesicState {
  double t = 0.0;
  ThetaPoint theta;
  std::array<double, 2> velocity = {0.0, 0.0};
};

enum class Termination { time_reached, domain_boundary, step_underflow };

struct GeodesicPath {
  std::vector<GeodesicState> states;
  Termination termination = Termination::time_reached;
};

/// Metric separation between a fiducial geodesic and an angle-perturbed one,
/// evaluated at matched times. separations[0] is the metric norm of the
/// initial coordinate offset (zero for a pure direction perturbation).
struct SpreadReport {
  std::vector<double> times;
  std::vector<double> separations;
};

/// g(v, v) at the given point.
double metric_speed_squared(const ThetaPoint& p, const std::array<double, 2>& v);

/// Geodesic acceleration -Gamma^k_ij v^i v^j with the alpha = 0 (Riemannian)
/// connection taken from the geometry module.
std::array<double, 2> geodesic_rhs(const GeodesicState& s);

/// Same acceleration evaluated from the explicit coefficient expressions in
/// psi' and psi''; kept as an independent transcription for cross-checks.
std::array<double, 2> geodesic_rhs_explicit(const GeodesicState& s);

/// Velocity of unit metric speed whose direction makes the given angle in the
/// orthonormal frame of the metric at `origin` (Cholesky frame).
std::array<double, 2> unit_speed_velocity(const ThetaPoint& origin,
                                          double angle);

/// Adaptive Dormand-Prince 4/5 integration with PI step control. Steps whose
/// trial point leaves the open domain are bisected until the boundary is
/// localized to within 1e-10 in t, then the path terminates cleanly.
/// `checkpoints` (strictly increasing, within (start.t, t_end]) are hit
/// exactly and recorded like any accepted step.
GeodesicPath integrate_geodesic(const GeodesicState& start, double t_end,
                                double rel_tol = 1e-9, double abs_tol = 1e-12,
                                std::span<const double> checkpoints = {});

/// Unit-speed geodesics launched at `directions` uniformly spaced frame
/// angles from `origin`.
std::vector<GeodesicPath> geodesic_bundle(const ThetaPoint& origin,
                                          int directions, double t_end,
                                          double rel_tol = 1e-9,
                                          double abs_tol = 1e-12);

/// Integrates the fiducial geodesic at `base_angle` and one perturbed by
/// `perturbation` radians, both unit speed, and reports their metric
/// separation at matched sample times.
SpreadReport spread_diagnostic(const ThetaPoint& origin, double base_angle,
                               double perturbation, double t_end,
                               double rel_tol = 1e-9, double abs_tol = 1e-12);

}  // namespace betalog
