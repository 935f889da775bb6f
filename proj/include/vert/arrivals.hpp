// Copyright 2026 The verttomo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace vert {

enum class ArrivalProvenance { kPicked, kModelled, kSynthetic };

std::string to_string(ArrivalProvenance p);
ArrivalProvenance parse_provenance(const std::string& s);

/// First-arrival times tau[s, r] in seconds with a validity mask.
struct ArrivalMatrix {
  std::size_t n_src = 0;
  std::size_t n_rcv = 0;
  std::vector<double> tau;
  std::vector<std::uint8_t> mask;  // 1 = valid
  ArrivalProvenance provenance = ArrivalProvenance::kModelled;

  ArrivalMatrix() = default;
  ArrivalMatrix(std::size_t src, std::size_t rcv, ArrivalProvenance prov);

  double& at(std::size_t s, std::size_t r) { return tau[s * n_rcv + r]; }
  double at(std::size_t s, std::size_t r) const { return tau[s * n_rcv + r]; }
  bool valid(std::size_t s, std::size_t r) const { return mask[s * n_rcv + r] != 0; }
  void set(std::size_t s, std::size_t r, double t, bool ok) {
    tau[s * n_rcv + r] = t;
    mask[s * n_rcv + r] = ok ? 1 : 0;
  }
  std::size_t valid_count() const;
};

/// CSV: comment line with the provenance, header row "source,r0,r1,...",
/// then one row per source; seconds in scientific notation, NaN for masked
/// pairs. Values round-trip exactly.
void write_arrivals_csv(const ArrivalMatrix& m, const std::filesystem::path& path);
ArrivalMatrix read_arrivals_csv(const std::filesystem::path& path);

}  // namespace vert
