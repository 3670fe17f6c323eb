#pragma once

namespace betalog {

/// A point on the beta-logistic parameter manifold.
/// The density is proportional to sech^theta1(x) * exp(theta2 * x),
/// normalizable exactly when theta1 + theta2 > 0 and theta1 - theta2 > 0.
struct ThetaPoint {
  double theta1 = 0.0;
  double theta2 = 0.0;

  bool in_domain() const noexcept {
    return theta1 + theta2 > 0.0 && theta1 - theta2 > 0.0;
  }
};

/// Throws std::domain_error naming the violated inequality.
void require_domain(const ThetaPoint& p);

}  // namespace betalog
