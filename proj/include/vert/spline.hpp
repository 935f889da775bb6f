// Copyright 2026 The verttomo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

namespace vert {

/// C2-continuous 360-degree periodic cubic spline through (angle deg, value)
/// knots.
class PeriodicCubicSpline {
 public:
  /// Knots must be sorted by angle in [0, 360), at least 3, no duplicates.
  explicit PeriodicCubicSpline(std::vector<std::pair<double, double>> knots);

  double operator()(double angle_deg) const { return eval(angle_deg, 0); }
  double derivative(double angle_deg, int order) const { return eval(angle_deg, order); }

 private:
  double eval(double angle_deg, int order) const;

  std::vector<double> angles_;
  std::vector<double> values_;
  std::vector<double> second_;  // second derivatives at knots
};

}  // namespace vert
