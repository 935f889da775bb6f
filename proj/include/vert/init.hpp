// Copyright 2026 The verttomo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "vert/arrivals.hpp"
#include "vert/geometry.hpp"

namespace vert {

/// One golden-section step: the bracket after the step and the two interior
/// probes it was decided on.
struct BracketStep {
  double lo = 0.0;
  double hi = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double f1 = 0.0;
  double f2 = 0.0;
};

struct GoldenResult {
  double x = 0.0;
  double value = 0.0;
  int iterations = 0;
  std::vector<BracketStep> trace;
  std::vector<std::pair<double, double>> evaluations;  // every (x, f(x)) in call order
};

/// Number of bracket reductions needed to bring hi - lo below tol.
int golden_iterations(double lo, double hi, double tol);

/// Golden-section minimisation with a fixed iteration count. The returned
/// point is the best of the final interior probe and the two final bracket
/// ends. Throws std::runtime_error if f returns a non-finite value.
GoldenResult golden_section(const std::function<double(double)>& f, double lo, double hi,
                            double tol);

/// Piecewise-constant model: c_roi inside the boundary, c_er outside.
struct BiVelocityModel {
  double c_er = 0.0;
  double c_roi = 0.0;
  RoiBoundary boundary;

  VelocityField materialize(const GridSpec& grid) const;
};

struct InitOptions {
  double bracket_lo = 1500.0;
  double bracket_hi = 4000.0;
  double tol = 1.0;
  double min_chord = 0.0;  // m; the pipeline passes two ER wavelengths
  int min_pairs = 10;
};

struct InitReport {
  std::string method;  // "virtual" or "bestbrt"
  double c_roi = 0.0;
  double misfit = 0.0;  // s^2 at c_roi
  int pairs = 0;
  GoldenResult search;
  double seconds = 0.0;
};

/// Straight-chord misfit of virtual arrivals for a trial ROI speed.
double virtual_misfit(const ArrivalMatrix& arrivals, const TransducerArray& virtual_array,
                      double c, double min_chord);

/// Fast initialisation from virtual-array arrivals: the chord between two
/// boundary transducers lies inside the convex ROI, so the model time is
/// chord / c_roi in closed form.
BiVelocityModel init_virtual(const ArrivalMatrix& arrivals, const TransducerArray& virtual_array,
                             const RoiBoundary& boundary, double c_er, const InitOptions& options = {},
                             InitReport* report = nullptr);

/// Square lattice that contains every transducer with a few cells to spare.
GridSpec grid_around(const TransducerArray& array, double spacing, int pad_cells = 6);

/// Eikonal initialisation from physical arrivals: every candidate speed is
/// materialised on a grid of the given spacing and solved by fast marching.
BiVelocityModel init_physical_bestbrt(const ArrivalMatrix& arrivals, const TransducerArray& array,
                                      const RoiBoundary& boundary, double c_er, double spacing,
                                      const InitOptions& options = {}, InitReport* report = nullptr);

/// Two sections: the bracket trace, then the misfit curve sorted by speed.
void write_init_report_csv(const InitReport& report, const std::filesystem::path& path);

}  // namespace vert
