#pragma once

#include <functional>
#include <string>
#include <vector>

namespace betalog {

enum class CheckKind {
  relative,  // |observed - expected| <= tolerance * |expected|
  absolute,  // |observed - expected| <= tolerance
  bound,     // |observed| <= tolerance
  flag,      // observed != 0
};

struct CheckRow {
  std::string criterion;  // "1" .. "10"
  std::string name;
  double observed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  CheckKind kind = CheckKind::relative;
  bool passed = false;
};

bool check_passes(double observed, double expected, double tolerance,
                  CheckKind kind);

struct CriterionSummary {
  std::string criterion;
  std::string title;
  bool passed = false;
};

struct VerificationReport {
  std::vector<CheckRow> rows;
  bool all_passed = false;

  std::vector<CriterionSummary> summaries() const;
};

/// Runs the whole closed-form-value and behavioral check table:
/// exact Fisher matrices, Bernoulli/Euler-case curvatures, +-1-flatness,
/// cross-formula agreement, quadrature and finite-difference consistency,
/// normalization and sampling law, polynomial moment identities, geodesic
/// diagnostics, and MAP recovery against a grid-search oracle.
VerificationReport run_verification();

/// Two-sided Kolmogorov-Smirnov statistic of draws against a CDF evaluated
/// by cumulative quadrature of the model density. `draws` need not be sorted.
double ks_statistic(std::vector<double> draws,
                    const std::function<double(double)>& pdf_fn,
                    double support_lo);

}  // namespace betalog
