#include "betalog/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "betalog/specfun.hpp"

namespace betalog {

namespace {

// psi' and psi'' at the three recurring arguments (theta1 +- theta2)/2
// and theta1, plus the determinant factor script-G:
//   G = s_lo * s_hi - s_mid (s_lo + s_hi),  det G = G / 4.
struct PolyValues {
  double s_lo, s_hi, s_mid;  // trigamma at lo, hi, theta1
  double p_lo, p_hi, p_mid;  // tetragamma at lo, hi, theta1
  double script_g;
};

PolyValues poly_values(const ThetaPoint& p) {
  require_domain(p);
  const double lo = 0.5 * (p.theta1 - p.theta2);
  const double hi = 0.5 * (p.theta1 + p.theta2);
  PolyValues v{};
  v.s_lo = specfun::polygamma(1, lo);
  v.s_hi = specfun::polygamma(1, hi);
  v.s_mid = specfun::polygamma(1, p.theta1);
  v.p_lo = specfun::polygamma(2, lo);
  v.p_hi = specfun::polygamma(2, hi);
  v.p_mid = specfun::polygamma(2, p.theta1);
  v.script_g = v.s_lo * v.s_hi - v.s_mid * (v.s_lo + v.s_hi);
  return v;
}

}  // namespace

FisherMatrix fisher(const ThetaPoint& p) {
  const PolyValues v = poly_values(p);
  FisherMatrix m;
  m.g11 = 0.25 * (v.s_hi + v.s_lo) - v.s_mid;
  m.g12 = 0.25 * (v.s_hi - v.s_lo);
  m.g22 = 0.25 * (v.s_hi + v.s_lo);
  m.det = 0.25 * v.script_g;
  m.inv11 = (v.s_hi + v.s_lo) / v.script_g;
  m.inv12 = (v.s_lo - v.s_hi) / v.script_g;
  m.inv22 = (v.s_hi + v.s_lo - 4.0 * v.s_mid) / v.script_g;
  const double norm_g = std::max(std::fabs(m.g11) + std::fabs(m.g12),
                                 std::fabs(m.g12) + std::fabs(m.g22));
  const double norm_inv = std::max(std::fabs(m.inv11) + std::fabs(m.inv12),
                                   std::fabs(m.inv12) + std::fabs(m.inv22));
  m.cond = norm_g * norm_inv;
  return m;
}

double TTensor::operator()(int i, int j, int k) const {
  const int twos = (i == 2) + (j == 2) + (k == 2);
  switch (twos) {
    case 0: return t111;
    case 1: return t112;
    case 2: return t122;
    case 3: return t222;
    default: throw std::domain_error("tensor indices must be 1 or 2");
  }
}

TTensor t_tensor(const ThetaPoint& p) {
  const PolyValues v = poly_values(p);
  TTensor t;
  t.t111 = 0.125 * (v.p_hi + v.p_lo) - v.p_mid;
  t.t112 = 0.125 * (v.p_hi - v.p_lo);
  t.t122 = 0.125 * (v.p_hi + v.p_lo);
  t.t222 = t.t112;
  return t;
}

double ConnectionField::lower(int i, int j, int k) const {
  const int twos = (i == 2) + (j == 2) + (k == 2);
  switch (twos) {
    case 0: return lower111;
    case 1: return lower112;
    case 2: return lower122;
    case 3: return lower222;
    default: throw std::domain_error("connection indices must be 1 or 2");
  }
}

double ConnectionField::raised(int k, int i, int j) const {
  if (k != 1 && k != 2) throw std::domain_error("connection indices must be 1 or 2");
  const int twos = (i == 2) + (j == 2);
  const std::array<double, 3> row1 = {raised1_11, raised1_12, raised1_22};
  const std::array<double, 3> row2 = {raised2_11, raised2_12, raised2_22};
  if (twos < 0 || twos > 2) throw std::domain_error("connection indices must be 1 or 2");
  return (k == 1) ? row1[twos] : row2[twos];
}

ConnectionField connection(const ThetaPoint& p, double alpha) {
  const TTensor t = t_tensor(p);
  const FisherMatrix g = fisher(p);
  const double factor = 0.5 * (1.0 - alpha);

  ConnectionField c;
  c.alpha = alpha;
  c.lower111 = factor * t.t111;
  c.lower112 = factor * t.t112;
  c.lower122 = factor * t.t122;
  c.lower222 = factor * t.t222;

  // Gamma^k_ij = Gamma_ij1 g^1k + Gamma_ij2 g^2k
  c.raised1_11 = c.lower111 * g.inv11 + c.lower112 * g.inv12;
  c.raised1_12 = c.lower112 * g.inv11 + c.lower122 * g.inv12;
  c.raised1_22 = c.lower122 * g.inv11 + c.lower222 * g.inv12;
  c.raised2_11 = c.lower111 * g.inv12 + c.lower112 * g.inv22;
  c.raised2_12 = c.lower112 * g.inv12 + c.lower122 * g.inv22;
  c.raised2_22 = c.lower122 * g.inv12 + c.lower222 * g.inv22;
  return c;
}

CurvatureReport curvature(const ThetaPoint& p, double alpha) {
  const PolyValues v = poly_values(p);
  const double g = v.script_g;
  const double amp = 1.0 - alpha * alpha;

  // Common cubic factor shared by R1212 and the Ricci components.
  const double w = v.p_mid * (v.s_hi * v.p_lo + v.s_lo * v.p_hi) -
                   v.s_mid * v.p_lo * v.p_hi;

  CurvatureReport r;
  r.alpha = alpha;
  r.r1212 = amp / (16.0 * g) * (-w);
  const double g2 = g * g;
  r.ricci11 = -amp * (v.s_lo + v.s_hi - 4.0 * v.s_mid) * w / (16.0 * g2);
  r.ricci12 = amp * (v.s_lo - v.s_hi) * w / (16.0 * g2);
  r.ricci22 = -amp * (v.s_lo + v.s_hi) * w / (16.0 * g2);
  r.scalar = 8.0 * r.r1212 / g;
  r.gaussian = 4.0 * r.r1212 / g;  // R1212 / det G
  return r;
}

CurvatureReport curvature_via_t_tensor(const ThetaPoint& p, double alpha) {
  const TTensor t = t_tensor(p);
  const FisherMatrix fm = fisher(p);
  const double amp = 1.0 - alpha * alpha;

  auto ginv = [&](int a, int b) {
    if (a == 1 && b == 1) return fm.inv11;
    if (a == 2 && b == 2) return fm.inv22;
    return fm.inv12;
  };

  // R_ijkl = (1 - alpha^2)/4 g^mn (T_kmi T_jln - T_kmj T_iln)
  double riem[3][3][3][3] = {};
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l) {
          double acc = 0.0;
          for (int m = 1; m <= 2; ++m)
            for (int n = 1; n <= 2; ++n) {
              acc += ginv(m, n) *
                     (t(k, m, i) * t(j, l, n) - t(k, m, j) * t(i, l, n));
            }
          riem[i][j][k][l] = 0.25 * amp * acc;
        }

  CurvatureReport r;
  r.alpha = alpha;
  r.r1212 = riem[1][2][1][2];

  // Ricci: R_ik = R_ijkl g^jl
  double ricci[3][3] = {};
  for (int i = 1; i <= 2; ++i)
    for (int k = 1; k <= 2; ++k) {
      double acc = 0.0;
      for (int j = 1; j <= 2; ++j)
        for (int l = 1; l <= 2; ++l) acc += riem[i][j][k][l] * ginv(j, l);
      ricci[i][k] = acc;
    }
  r.ricci11 = ricci[1][1];
  r.ricci12 = ricci[1][2];
  r.ricci22 = ricci[2][2];

  r.scalar = ricci[1][1] * ginv(1, 1) + ricci[2][2] * ginv(2, 2) +
             2.0 * ricci[1][2] * ginv(1, 2);
  r.gaussian = r.r1212 / fm.det;
  return r;
}

double gaussian_curvature_riemannian(const ThetaPoint& p) {
  const PolyValues v = poly_values(p);
  const double denom_root =
      v.s_mid * v.s_lo + (v.s_mid - v.s_lo) * v.s_hi;  // equals -script_g
  const double denom = 4.0 * denom_root * denom_root;
  const double num = v.p_hi * (v.p_lo * v.s_mid - v.p_mid * v.s_lo) -
                     v.p_mid * v.p_lo * v.s_hi;
  return num / denom;
}

}  // namespace betalog
