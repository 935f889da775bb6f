// Copyright 2026 The verttomo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "vert/arrivals.hpp"
#include "vert/fmc.hpp"
#include "vert/wave_sim.hpp"

namespace vert {

/// x[t] minus the mean of x over a centred window of `window` samples,
/// truncated at the trace ends. Requires window >= 2.
std::vector<double> rolling_mean_highpass(std::span<const double> x, int window);

enum class PickMethod {
  kThreshold,     // analytic envelope above eta * max, back to zero crossing
  kZeroCrossing,  // |x| above eta * max, back to zero crossing
  kMovingMax,     // earliest local max of windowed energy above eta * max
};

PickMethod parse_pick_method(const std::string& name);
std::string to_string(PickMethod m);

struct PickParams {
  PickMethod method = PickMethod::kThreshold;
  double threshold = 0.2;  // eta, relative to the gated maximum
  double energy_window = 0.0;  // moving-max window, s; 0 = one sample
  double delay = 0.0;          // subtracted from every pick, s
  double gate_start = -std::numeric_limits<double>::infinity();  // absolute time, s
  double gate_end = std::numeric_limits<double>::infinity();
  double min_confidence = 0.05;
};

struct Pick {
  double tau = std::numeric_limits<double>::quiet_NaN();
  double confidence = 0.0;  // 0 = masked
  bool valid() const { return confidence > 0.0; }
};

/// Picks the first arrival of one trace sampled at t0 + k dt.
Pick pick_first_arrival(std::span<const double> trace, double dt, double t0, const PickParams& params);

/// Picker response to the clean burst: pick time minus true onset. Used as
/// PickParams::delay so picks target the wavefront onset.
double calibrate_picker_delay(const Toneburst& burst, double dt, const PickParams& params);

struct PickConfig {
  PickParams params;
  double highpass_window = 0.0;  // rolling-mean window, s; 0 = off
  // Per-pair gate [start_factor * chord / c_fast, end_factor * chord / c_slow + tail].
  double c_fast = 0.0;  // 0 = no gating
  double c_slow = 0.0;
  double gate_start_factor = 1.0;
  double gate_end_factor = 1.5;
  double gate_tail = 0.0;
  double min_chord = 0.0;  // shorter pairs are masked
};

struct PickReport {
  std::size_t total = 0;
  std::size_t masked = 0;
  double masked_fraction = 0.0;
  bool warning = false;  // more than 20 % masked
  double delay = 0.0;
  std::string message;
};

/// Applies the pre-filter and picker to every trace. Sources run in parallel.
ArrivalMatrix pick_matrix(const FmcData& fmc, const PickConfig& config, PickReport* report = nullptr);

/// CSV of masked or low-confidence pairs for manual review.
void write_review_csv(const FmcData& fmc, const ArrivalMatrix& arrivals, const std::string& path);

}  // namespace vert
