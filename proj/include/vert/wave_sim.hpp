// Copyright 2026 The verttomo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "vert/arrivals.hpp"
#include "vert/fmc.hpp"
#include "vert/geometry.hpp"

namespace vert {

/// Sine carrier under a Hann window, non-zero on [0, cycles / frequency].
struct Toneburst {
  double frequency = 0.0;  // Hz
  int cycles = 0;
  double dt = 0.0;  // sample interval of `samples`
  double amplitude = 1.0;
  std::vector<double> samples;

  double duration() const { return cycles / frequency; }
  double value(double t) const;
};

Toneburst hann_toneburst(double frequency, int cycles, double dt, double amplitude = 1.0);

/// Largest stable leapfrog step: courant * spacing / (c_max * sqrt(2)).
double stable_dt(const VelocityField& field, double courant = 0.4);
double stable_dt(double c_max, double spacing, double courant = 0.4);

enum class SourceKind {
  kMonopole,  // pressure injection
  kDipole,    // force along the source array normals
};

struct SimConfig {
  double courant = 0.4;
  double duration = 0.0;    // recorded time span, s
  double record_dt = 0.0;   // requested output interval; 0 = simulation step
  double sponge_wavelengths = 9.0;
  double sponge_reflection = 1e-5;  // design round-trip amplitude through the sponge
  double margin = 0.0;      // extra background medium between field edge and sponge, m
  int spatial_order = 4;    // 2 or 4
  bool use_density = true;
  bool double_precision = false;
  SourceKind source = SourceKind::kMonopole;
};

/// Optional per-step diagnostics for the first shot of a run.
struct SimDiagnostics {
  std::vector<double> energy;  // total acoustic energy after every step
  int source_off_step = 0;     // first step with no source input
};

/// 2D scalar-acoustic FDTD (staggered velocity-pressure leapfrog) with an
/// absorbing sponge. Every source fires the burst in turn; receivers record
/// pressure by bilinear interpolation. Shots run in parallel.
FmcData simulate_fmc(const VelocityField& field, const TransducerArray& sources,
                     const TransducerArray& receivers, const Toneburst& burst,
                     const SimConfig& config, SimDiagnostics* diagnostics = nullptr);

/// Eikonal-synthetic FMC: each valid pair carries the burst starting at its
/// arrival time tau[s, r]; masked pairs stay zero. No wave physics.
FmcData synthetic_fmc(const ArrivalMatrix& arrivals, const TransducerArray& sources,
                      const TransducerArray& receivers, const Toneburst& burst, double dt, int n_t);

}  // namespace vert
