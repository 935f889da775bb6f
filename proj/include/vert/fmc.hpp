// Copyright 2026 The verttomo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "vert/geometry.hpp"

namespace vert {

/// Full-matrix-capture dataset: one trace per (source, receiver) pair, all
/// sharing the sample interval dt and start time t0.
struct FmcData {
  TransducerArray sources;
  TransducerArray receivers;
  double dt = 0.0;
  double t0 = 0.0;
  int n_t = 0;
  std::vector<float> traces;  // (src, rcv, t) order
  std::string provenance;     // e.g. "fdtd", "virtual"; not serialised

  FmcData() = default;
  FmcData(TransducerArray src, TransducerArray rcv, double dt, double t0, int n_t);

  std::size_t n_src() const { return sources.size(); }
  std::size_t n_rcv() const { return receivers.size(); }
  std::span<float> trace(std::size_t s, std::size_t r) {
    return {traces.data() + (s * n_rcv() + r) * n_t, static_cast<std::size_t>(n_t)};
  }
  std::span<const float> trace(std::size_t s, std::size_t r) const {
    return {traces.data() + (s * n_rcv() + r) * n_t, static_cast<std::size_t>(n_t)};
  }
  double time(int k) const { return t0 + k * dt; }

  /// Throws std::invalid_argument on dt <= 0, size mismatch or non-finite
  /// samples.
  void validate() const;
};

/// "FMC1" file: ASCII header lines (magic, n_src, n_rcv, n_t, dt, t0), then
/// source and receiver positions as little-endian float64 (x, y) pairs, then
/// traces as little-endian float32 in (src, rcv, t) order.
void write_fmc1(const FmcData& fmc, const std::filesystem::path& path);
FmcData read_fmc1(const std::filesystem::path& path);

}  // namespace vert
