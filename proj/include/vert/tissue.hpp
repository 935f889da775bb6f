// Copyright 2026 The verttomo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace vert {

struct TissueProperties {
  double speed_mean;    // m/s, dilational
  double speed_sd;      // m/s
  double density_mean;  // kg/m^3
  double density_sd;    // kg/m^3

  /// Properties shifted by k standard deviations (speed and density together).
  double speed_at(double k) const { return speed_mean + k * speed_sd; }
  double density_at(double k) const { return density_mean + k * density_sd; }
};

/// Tissue reference values; muscle stands in for all soft tissue.
struct TissueTable {
  TissueProperties cortical{3514.9, 420.3, 1908.0, 133.0};
  TissueProperties cancellous{2117.5, 288.7, 1178.0, 149.0};
  TissueProperties soft{1588.4, 21.6, 1090.0, 52.0};
};

}  // namespace vert
