// Copyright 2026 The verttomo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "vert/fmc.hpp"
#include "vert/geometry.hpp"

namespace vert {

/// max(cos theta, 0)^n; exactly zero for |theta| >= pi / 2.
double directivity(double theta, int n);

/// Geometry and weights mapping physical transducers i onto virtual
/// transducers j. Arrays are indexed (j, i), row-major.
struct MigrationOperator {
  TransducerArray physical;
  TransducerArray virtual_array;
  double c_er = 0.0;
  int exponent = 1;
  std::vector<double> r;           // |S'_j - S_i|
  std::vector<double> theta;       // signed angle of S_i - S'_j from the normal at S'_j
  std::vector<double> quadrature;  // trapezium angular weight; 0 outside the lit half-space
  std::vector<double> gain;        // directivity value

  std::size_t n_virtual() const { return virtual_array.size(); }
  std::size_t n_physical() const { return physical.size(); }
  std::size_t index(std::size_t j, std::size_t i) const { return j * n_physical() + i; }
  /// Real part of the weight: sqrt(r) * quadrature * directivity.
  double amplitude(std::size_t j, std::size_t i) const;
  double weight_sum(std::size_t j) const;
};

/// Requires virtual normals, c_er > 0, n >= 1 and every virtual point inside
/// the convex hull of the physical array.
MigrationOperator build_operator(const TransducerArray& physical, const TransducerArray& virtual_array,
                                 double c_er, int n);

/// One row per (j, i) pair: j, i, r, theta, quadrature, directivity.
void write_operator_csv(const MigrationOperator& op, const std::filesystem::path& path);

/// Multiplies the final `fraction` of x by a half-cosine ramp down to zero.
void apply_end_taper(std::span<double> x, double fraction);

struct VirtualiseConfig {
  double taper_fraction = 0.1;
  double low_cut_fraction = 0.01;  // share of the lowest bins zeroed
  double band_max = 0.0;           // Hz; bins above are skipped, 0 = keep all
  double window_start = 0.0;       // s
  double window_end = 0.0;         // s; 0 = input duration
  std::size_t chunk = 32;          // virtual sources per work block
};

struct VirtualiseReport {
  std::size_t n_fft = 0;
  std::size_t bins_used = 0;
  std::size_t bins_zeroed = 0;
  bool empty_window = false;  // input had energy but the window holds none
  std::string message;
};

/// Double-precision virtual traces, (virtual source, virtual receiver, t).
struct VirtualTraces {
  std::size_t n_src = 0;
  std::size_t n_rcv = 0;
  double dt = 0.0;
  double t0 = 0.0;
  int n_t = 0;
  std::vector<double> traces;
};

/// Per frequency bin: X' = W_T X W_R^T with W[j, i] = exp(+i k r) * amplitude,
/// k = omega / c_er. exp(+i k r) advances by r / c_er under the forward
/// transform convention exp(-i omega t). A null receive operator keeps the
/// physical receivers.
VirtualTraces virtualise_traces(const FmcData& fmc, const MigrationOperator& transmit,
                                const MigrationOperator* receive, const VirtualiseConfig& config,
                                VirtualiseReport* report = nullptr);

/// As virtualise_traces, packaged as an FmcData over the virtual arrays.
FmcData virtualise_fmc(const FmcData& fmc, const MigrationOperator& transmit,
                       const MigrationOperator* receive, const VirtualiseConfig& config,
                       VirtualiseReport* report = nullptr);

}  // namespace vert
