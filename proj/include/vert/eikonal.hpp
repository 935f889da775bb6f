// Copyright 2026 The verttomo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "vert/arrivals.hpp"
#include "vert/geometry.hpp"

namespace vert {

/// First-arrival times on the lattice of a VelocityField.
struct TravelTimeField {
  GridSpec grid;
  std::vector<double> tau;  // seconds; +inf where unreachable
  Vec2 source;
  std::vector<std::size_t> order;  // acceptance order, if recorded

  double at(int i, int j) const { return tau[grid.index(i, j)]; }
  /// Bilinear interpolation.
  double sample(Vec2 p) const { return bilinear(grid, tau, p); }
};

struct FmmOptions {
  int order = 2;          // upwind difference order, 1 or 2
  int source_radius = 4;  // half-width in cells of the straight-ray initialised square
  bool record_order = false;
};

/// Fast marching solution of |grad tau| = 1 / c from a point source. Cells
/// within source_radius of the source (Chebyshev distance) are initialised
/// with straight-ray times and frozen.
TravelTimeField fmm_solve(const VelocityField& field, Vec2 source, const FmmOptions& options = {});

/// tau[s, r] from one FMM solve per source, read at receivers bilinearly.
/// Sources solve in parallel.
ArrivalMatrix arrival_matrix_model(const VelocityField& field, const TransducerArray& sources,
                                   const TransducerArray& receivers, const FmmOptions& options = {});

/// Copy of the field extended by `cells` on every side with edge values.
VelocityField pad_field(const VelocityField& field, int cells);

}  // namespace vert
