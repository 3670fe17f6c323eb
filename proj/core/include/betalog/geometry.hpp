#pragma once

#include "betalog/theta.hpp"

namespace betalog {

/// Fisher information matrix at a point, with determinant and inverse.
/// Everything is closed-form in the trigamma function; `cond` is the
/// infinity-norm condition number, which blows up like (theta1 -+ theta2)^-2
/// near the domain boundary where the metric degenerates.
struct FisherMatrix {
  double g11 = 0.0, g12 = 0.0, g22 = 0.0;
  double det = 0.0;
  double inv11 = 0.0, inv12 = 0.0, inv22 = 0.0;
  double cond = 0.0;
};

/// Totally symmetric cubic tensor T_ijk = d_i d_j d_k phi
/// (= E[d_i l d_j l d_k l] for this exponential family).
struct TTensor {
  double t111 = 0.0, t112 = 0.0, t122 = 0.0, t222 = 0.0;

  /// Component lookup by indices in {1, 2}; symmetric in all three slots.
  double operator()(int i, int j, int k) const;
};

/// alpha-connection coefficients, lower (totally symmetric) and raised.
struct ConnectionField {
  double alpha = 0.0;
  double lower111 = 0.0, lower112 = 0.0, lower122 = 0.0, lower222 = 0.0;
  // raised[k-1][.]: Gamma^k_11, Gamma^k_12, Gamma^k_22
  double raised1_11 = 0.0, raised1_12 = 0.0, raised1_22 = 0.0;
  double raised2_11 = 0.0, raised2_12 = 0.0, raised2_22 = 0.0;

  double lower(int i, int j, int k) const;
  double raised(int k, int i, int j) const;
};

/// Curvature quantities at one point and one alpha. In two dimensions
/// scalar = 2 * gaussian and scalar = 8 R1212 / (4 det G); everything
/// vanishes identically at alpha = +-1.
struct CurvatureReport {
  double alpha = 0.0;
  double r1212 = 0.0;
  double ricci11 = 0.0, ricci12 = 0.0, ricci22 = 0.0;
  double scalar = 0.0;
  double gaussian = 0.0;
};

/// Fisher matrix from the trigamma closed form.
FisherMatrix fisher(const ThetaPoint& p);

/// Cubic tensor from the tetragamma closed form.
TTensor t_tensor(const ThetaPoint& p);

/// Connection coefficients: lower = ((1-alpha)/2) d^3 phi,
/// raised = lower contracted with the inverse metric.
ConnectionField connection(const ThetaPoint& p, double alpha);

/// Curvature from the closed-form expressions in psi' and psi''.
CurvatureReport curvature(const ThetaPoint& p, double alpha);

/// Same quantities recomputed from the generic contraction
/// R_ijkl = (1-alpha^2)/4 g^mn (T_kmi T_jln - T_kmj T_iln).
/// Independent route used to cross-check `curvature`.
CurvatureReport curvature_via_t_tensor(const ThetaPoint& p, double alpha);

/// Gaussian curvature of the alpha = 0 (Riemannian) structure from its
/// dedicated closed form; equals curvature(p, 0).gaussian.
double gaussian_curvature_riemannian(const ThetaPoint& p);

}  // namespace betalog
