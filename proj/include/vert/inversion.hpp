// Copyright 2026 The verttomo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "vert/arrivals.hpp"
#include "vert/eikonal.hpp"
#include "vert/geometry.hpp"

namespace vert {

struct InversionConfig {
  int max_iterations = 10;
  int cg_iterations = 60;
  double lambda_tv = 0.0;
  double lambda_d1 = 0.0;
  double c_min = 1000.0;  // m/s
  double c_max = 5000.0;
  double damping = 1.0;             // first trial step along the Gauss-Newton update
  double lm_damping = 0.1;          // Levenberg-Marquardt weight, relative to mean ray coverage
  int max_backtracks = 5;           // step halvings before an iteration is rejected
  double min_relative_decrease = 1e-3;
  double huber_epsilon = 1e-3;      // TV smoothing, relative to the mean start slowness
  int levels = 1;                   // > 1: coarse-to-fine, halving the spacing per level
  bool reciprocal_pairs = true;     // coincident arrays: fit s < r only, on the mean of both picks
  FmmOptions fmm;

  /// Throws std::invalid_argument on negative weights or unordered bounds.
  void validate() const;
};

struct IterationRecord {
  int iteration = 0;
  double misfit = 0.0;        // s^2, before the update
  int valid_pairs = 0;
  double max_residual = 0.0;  // s
  double update_rms = 0.0;    // applied slowness change, s/m
  double step = 0.0;          // accepted fraction of the Gauss-Newton step, 0 if rejected
  double misfit_after = 0.0;  // s^2 after the accepted step (misfit if rejected)
  int trapped_rays = 0;
};

struct MisfitReport {
  std::vector<IterationRecord> iterations;
  double initial_misfit = 0.0;
  double final_misfit = 0.0;
  int ray_artefact_cells = 0;  // update > 5x the median update over ray-covered cells
  double seconds = 0.0;
};

/// A back-traced ray: the polyline from receiver to source and its lengths
/// distributed bilinearly onto lattice nodes, so sum(length * slowness)
/// approximates the travel time.
struct RayPath {
  std::vector<Vec2> points;
  std::vector<std::uint32_t> nodes;
  std::vector<double> lengths;  // m, one per node, sorted by node index
  bool ok = false;
};

/// Steepest descent on tau from the receiver to the source with steps of half
/// a spacing. Fails (ok = false) when the gradient is undefined or the step
/// count exceeds 10 * (nx + ny).
RayPath backtrace_ray(const TravelTimeField& tau, Vec2 receiver);

struct InversionResult {
  VelocityField field;
  MisfitReport report;
};

/// Bent-ray travel-time inversion. Each outer iteration solves the eikonal
/// equation for every source, traces every valid pair, and takes a
/// regularised Gauss-Newton step computed by preconditioned CG:
///   (L'L + mu + lambda_tv * TV'' + lambda_d1 * D'D) du = -(L'r + lambda_tv * TV' + lambda_d1 * D'D u)
/// in slowness normalised by its start mean. Steps that raise the data misfit
/// are halved until they do not.
InversionResult invert(const VelocityField& start, const ArrivalMatrix& arrivals,
                       const TransducerArray& sources, const TransducerArray& receivers,
                       const InversionConfig& config);

void write_misfit_csv(const MisfitReport& report, const std::filesystem::path& path);

/// First-Fresnel-zone size sqrt(c * L / f).
double fresnel_limit(double c, double distance, double frequency);

struct ResolutionReport {
  double brt_distance = 0.0;   // longest physical pair, m
  double brt_limit = 0.0;      // m
  double vert_distance = 0.0;  // ROI diameter, m
  double vert_limit = 0.0;     // m
};

ResolutionReport resolution_report(const TransducerArray& physical, double c0,
                                   const RoiBoundary& boundary, double c_roi, double frequency);

}  // namespace vert
