// Copyright 2026 The verttomo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>

#include "vert/geometry.hpp"
#include "vert/spline.hpp"
#include "vert/tissue.hpp"

namespace vert {

/// Smiley face layout. All lengths in meters; `scale` multiplies the
/// reference dimensions (24 mm face inside an 80 mm array).
struct SmileyGeometry {
  explicit SmileyGeometry(double scale = 1.0);

  double scale;
  double array_radius;
  int array_count = 317;
  Vec2 face_centre;
  double face_radius;
  Vec2 left_eye;
  Vec2 right_eye;
  double eye_radius;
  Vec2 mouth_centre;
  double mouth_radius;
  double mouth_line_y;  // cap above this line is folded below it

  enum class Region { kSoft, kFace, kLeftEye, kRightEye, kMouth };
  Region classify(Vec2 p) const;
};

/// Bone cross-section built from periodic splines of diameter and cortical
/// thickness over azimuth (degrees, 0 = +x, counter-clockwise).
class BoneGeometry {
 public:
  explicit BoneGeometry(double scale = 1.0);

  double scale() const { return scale_; }
  double array_radius() const { return array_radius_; }
  int array_count() const { return 792; }
  Vec2 centre() const { return centre_; }

  double periosteum_radius(double azimuth_deg) const;
  double thickness(double azimuth_deg) const;
  double endosteum_radius(double azimuth_deg) const {
    return periosteum_radius(azimuth_deg) - thickness(azimuth_deg);
  }
  double cancellous_x_min() const { return x_min_; }
  double cancellous_x_max() const { return x_max_; }

  enum class Region { kSoft, kCortical, kCancellous };
  Region classify(Vec2 p) const;
  /// Standard-deviation offset of the cancellous gradient at abscissa x.
  double cancellous_offset(double x) const;

  /// Reference knots (azimuth deg, mm).
  static const std::vector<std::pair<double, double>>& diameter_knots();
  static const std::vector<std::pair<double, double>>& thickness_knots();

 private:
  double scale_;
  double array_radius_;
  Vec2 centre_;
  PeriodicCubicSpline diameter_mm_;
  PeriodicCubicSpline thickness_mm_;
  double x_min_ = 0.0;
  double x_max_ = 0.0;
};

struct Phantom {
  std::string name;
  double scale = 1.0;
  VelocityField field;
  RoiBoundary boundary;
  TransducerArray array;
  // Exactly one of these is set, matching `name`.
  std::shared_ptr<const SmileyGeometry> smiley;
  std::shared_ptr<const BoneGeometry> bone;
};

/// Smiley80: bone smiley face in soft tissue. The grid covers the square
/// bounding the physical array.
Phantom build_smiley80(double spacing, double scale = 1.0,
                       const TissueTable& tissue = {});

/// Bone200: cortical shell with graded cancellous interior.
Phantom build_bone200(double spacing, double scale = 1.0,
                      const TissueTable& tissue = {});

Phantom build_phantom(const std::string& name, double spacing, double scale = 1.0);

/// count points equally spaced by arc length, each with its outward normal.
TransducerArray place_virtual_array(const RoiBoundary& boundary, int count);

}  // namespace vert
