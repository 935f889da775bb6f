// Copyright 2026 The verttomo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "vert/fmc.hpp"
#include "vert/geometry.hpp"
#include "vert/init.hpp"
#include "vert/inversion.hpp"
#include "vert/phantoms.hpp"
#include "vert/picking.hpp"
#include "vert/virtualise.hpp"
#include "vert/wave_sim.hpp"

namespace vert {

/// Every length, time and frequency below is given at the reference
/// scale; the pipeline multiplies lengths and times by `scale` and divides
/// frequencies by it, so one config describes both desk and full runs.
struct PipelineConfig {
  // [run]
  std::string mode = "vert";  // brt | bestbrt | nearbrt | vert
  std::filesystem::path out_dir = "out";
  std::filesystem::path cache_dir;  // empty = <out_dir>/cache
  bool synthetic_arrivals = false;  // eikonal-synthetic FMC instead of FDTD
  int threads = 0;                  // 0 = hardware concurrency

  // [phantom]
  std::string phantom = "smiley80";
  double scale = 0.5;
  double truth_spacing = 0.1e-3;

  // [acquisition]
  double frequency = 1e6;
  int cycles = 5;
  double cells_per_wavelength = 10.0;  // FDTD, in ER wavelengths
  double courant = 0.4;
  int spatial_order = 4;
  double duration = 0.0;   // 0 = array crossing time at c_er plus two bursts
  double record_dt = 0.0;  // 0 = 1 / (20 f)
  double margin = 0.0;

  // [virtual]
  int virtual_count = 0;  // 0 = phantom default (300 smiley, 400 bone)
  int exponent = 1;
  double taper_fraction = 0.1;
  double low_cut_fraction = 0.01;
  double band_max_factor = 3.0;  // of f; 0 = all bins
  double window_end = 0.0;       // 0 = 1.5 * D_roi / c_slow + two bursts
  int chunk = 32;

  // [picking]
  std::string pick_method = "threshold";
  double pick_threshold = 0.2;
  double energy_window_periods = 1.0;
  double min_confidence = 0.05;
  double highpass_periods = 0.0;  // rolling-mean window in periods; 0 = off
  double c_fast = 4300.0;
  double c_slow = 1500.0;
  double gate_start_factor = 1.0;
  double gate_end_factor = 1.5;
  double gate_tail_periods = 5.0;
  double min_chord_wavelengths = 2.0;

  // [init]
  double init_lo = 1500.0;
  double init_hi = 4000.0;
  double init_tol = 1.0;
  double bestbrt_spacing = 0.1e-3;

  // [inversion]
  InversionConfig inversion;
  double inversion_spacing = 0.1e-3;

  // [metrics]
  bool metrics = true;

  /// Rejects unknown modes or phantoms and out-of-range values.
  void validate() const;

  // Scaled helpers.
  double f() const { return frequency / scale; }
  double len(double reference) const { return reference * scale; }
};

/// Sectioned "key = value" text; '#' starts a comment. Unknown sections or
/// keys are errors.
PipelineConfig parse_config(const std::string& text);
PipelineConfig load_config(const std::filesystem::path& path);

/// Canonical text of every value, used for cache keys and run logs.
std::string canonical_config(const PipelineConfig& config);

/// Result-affecting values of one section, for stage cache keys.
std::string section_text(const PipelineConfig& config, const std::string& section);

struct EyeMetric {
  bool resolved = false;
  double left_x = 0.0;     // position of the left-eye extremum along the line, m
  double right_x = 0.0;
  double separation = 0.0;
  double left_contrast = 0.0;  // |feature - face reference|, m/s
  double right_contrast = 0.0;
};

struct MetricsReport {
  std::string mode;
  double roi_rmse = 0.0;  // m/s
  bool has_truth = false;
  EyeMetric eyes;                                         // smiley only
  std::vector<std::pair<double, double>> thickness_mm;    // bone only: azimuth, estimate
  double c_roi_init = 0.0;
  double initial_misfit = 0.0;
  double final_misfit = 0.0;
  int ray_artefact_cells = 0;
  ResolutionReport resolution;
  PickReport picks;
  std::vector<std::pair<std::string, double>> stage_seconds;
  std::vector<std::pair<std::string, bool>> stage_cached;
  /// Wall time each cacheable stage took when it was actually computed, so
  /// cached reruns still report the original cost.
  std::vector<std::pair<std::string, double>> compute_seconds;
  double init_seconds = 0.0;  // golden-section search alone
};

// Stage building blocks shared by run_pipeline and the CLI subcommands. None
// of them touch the cache.
double pipeline_c_er();
Phantom pipeline_phantom(const PipelineConfig& config);
TransducerArray pipeline_virtual_array(const PipelineConfig& config, const Phantom& phantom);
Toneburst pipeline_burst(const PipelineConfig& config);
/// FMC on the physical array, or on the virtual array for nearbrt.
FmcData acquire(const PipelineConfig& config, const Phantom& truth);
FmcData pipeline_virtualise(const PipelineConfig& config, const Phantom& truth, const FmcData& fmc,
                            VirtualiseReport* report = nullptr);
PickConfig pipeline_pick_config(const PipelineConfig& config, double dt);
InitOptions pipeline_init_options(const PipelineConfig& config);

/// Runs one imaging configuration end to end, writing artifacts into
/// out_dir and serving unchanged stages from the cache. Stage failures are
/// rethrown as std::runtime_error prefixed with the stage name.
MetricsReport run_pipeline(const PipelineConfig& config);

void write_metrics_json(const MetricsReport& report, const std::filesystem::path& path);

/// 8-bit binary PGM ("P5"): header "P5\n<nx> <ny>\n255\n", then nx*ny bytes,
/// top row first (largest y), left to right. Intensity round(255 * (c - lo) /
/// (hi - lo)), clamped to [0, 255].
void render_field(const VelocityField& field, double lo, double hi,
                  const std::filesystem::path& path);
std::vector<std::uint8_t> render_pixels(const VelocityField& field, double lo, double hi);

struct ProfileSample {
  double distance = 0.0;
  Vec2 point;
  double value = 0.0;
};

/// `samples` bilinear samples from a to b inclusive; a zero-length line gives
/// one sample.
std::vector<ProfileSample> extract_profile(const VelocityField& field, Vec2 a, Vec2 b, int samples);
void write_profile_csv(const std::vector<ProfileSample>& profile, const std::filesystem::path& path);

/// RMS speed error over truth-grid nodes inside the boundary.
double roi_rmse(const VelocityField& image, const VelocityField& truth, const RoiBoundary& boundary);

/// Left eye: speed maximum, right eye: speed minimum, each searched within
/// one eye radius of its centre on the eye line and required to be a strict
/// interior extremum differing from the face reference by at least a quarter
/// of the cortical standard deviation.
EyeMetric eye_metric(const VelocityField& image, const SmileyGeometry& geo);

/// Outermost run above the midpoint of soft and cortical speeds along a ray
/// from the bone centre.
double cortical_thickness(const VelocityField& image, const BoneGeometry& geo, double azimuth_deg);

/// Copy of `image` on `target`, with `background` where image has no data.
VelocityField composite(const VelocityField& image, const GridSpec& target, double background);

}  // namespace vert
