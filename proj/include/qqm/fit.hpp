#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "qqm/error.hpp"

namespace qqm {

struct LineFit {
  double slope = 0;
  double intercept = 0;
  double r_squared = 0;
  int n = 0;
};

/// Ordinary least-squares line y = slope*x + intercept. r_squared is the
/// usual coefficient of determination; for a constant y it is defined as 1
/// when the fit is exact and 0 otherwise.
inline LineFit fit_line(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  if (x.size() != y.size()) throw InvalidInput("fit_line: x and y must have equal length");
  if (x.size() < 2) throw InvalidInput("fit_line: need at least two points");
  const double n = static_cast<double>(x.size());
  const double mx = x.mean();
  const double my = y.mean();
  const double sxx = (x.array() - mx).square().sum();
  const double sxy = ((x.array() - mx) * (y.array() - my)).sum();
  const double syy = (y.array() - my).square().sum();
  if (sxx == 0) throw InvalidInput("fit_line: x values are all identical");

  LineFit f;
  f.n = static_cast<int>(x.size());
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  const double ss_res = (y.array() - (f.slope * x.array() + f.intercept)).square().sum();
  f.r_squared = syy > 0 ? 1.0 - ss_res / syy : (ss_res == 0 ? 1.0 : 0.0);
  return f;
}

}  // namespace qqm
