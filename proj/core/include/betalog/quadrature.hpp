#pragma once

#include <functional>
#include <stdexcept>

namespace betalog {

enum class QuadScheme { tanh_sinh, gauss_kronrod };

struct QuadratureSpec {
  QuadScheme scheme = QuadScheme::tanh_sinh;
  double abs_tol = 1e-12;
  double rel_tol = 1e-11;
  int max_levels = 12;
};

struct IntegralResult {
  double value = 0.0;
  double est_error = 0.0;
  bool converged = false;
  long evaluations = 0;
};

/// Thrown when an adaptive rule exhausts its level budget.
class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integral of f over the finite interval [a, b] with the requested scheme.
/// tanh_sinh doubles the node density per level; gauss_kronrod bisects the
/// segment with the largest error estimate (up to 2^max_levels segments).
IntegralResult integrate(const std::function<double(double)>& f, double a,
                         double b, const QuadratureSpec& spec = {});

/// Single non-adaptive 15-point Gauss-Kronrod panel; err is the |K15-G7| gap.
/// Cheap building block for cumulative integrals over many short intervals.
void gauss_kronrod_15(const std::function<double(double)>& f, double a,
                      double b, double& value, double& err);

}  // namespace betalog
