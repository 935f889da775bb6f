// Copyright 2026 The verttomo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace vert {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  bool operator==(const Vec2&) const = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

/// Regular lattice of sample points. Sample (i, j) sits at
/// origin + (i, j) * spacing; storage is row-major with y outer.
struct GridSpec {
  Vec2 origin;
  double spacing = 0.0;
  int nx = 0;
  int ny = 0;

  std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * nx + i;
  }
  Vec2 point(int i, int j) const {
    return {origin.x + i * spacing, origin.y + j * spacing};
  }
  /// Continuous lattice coordinates of a physical position.
  Vec2 to_lattice(Vec2 p) const {
    return {(p.x - origin.x) / spacing, (p.y - origin.y) / spacing};
  }
  /// True when bilinear interpolation at p only touches valid samples.
  bool contains(Vec2 p) const;
  bool operator==(const GridSpec&) const = default;

  /// Square grid of n x n samples with the given spacing covering the square
  /// [centre - half_width, centre + half_width]^2 cell-wise.
  static GridSpec covering(Vec2 centre, double half_width, double spacing);
};

/// Bilinear interpolation of a lattice field. Positions outside the lattice
/// are clamped to the boundary.
double bilinear(const GridSpec& grid, std::span<const double> values, Vec2 p);

/// Sound-speed map (m/s) with optional density (kg/m^3).
class VelocityField {
 public:
  static constexpr double kMinSpeed = 100.0;
  static constexpr double kMaxSpeed = 10000.0;

  VelocityField() = default;
  VelocityField(GridSpec grid, std::vector<double> speed,
                std::vector<double> density = {});
  static VelocityField uniform(GridSpec grid, double speed);

  const GridSpec& grid() const { return grid_; }
  std::span<const double> speed() const { return speed_; }
  std::span<const double> density() const { return density_; }
  bool has_density() const { return !density_.empty(); }

  double at(int i, int j) const { return speed_[grid_.index(i, j)]; }
  double sample(Vec2 p) const { return bilinear(grid_, speed_, p); }
  double max_speed() const;
  double min_speed() const;

  /// Bilinear resampling onto another lattice.
  VelocityField resampled(const GridSpec& target) const;

 private:
  GridSpec grid_;
  std::vector<double> speed_;
  std::vector<double> density_;
};

enum class ArrayKind { kPhysical, kVirtual };

struct TransducerArray {
  std::vector<Vec2> positions;
  std::vector<Vec2> normals;  // empty, or one outward unit vector per position
  ArrayKind kind = ArrayKind::kPhysical;

  std::size_t size() const { return positions.size(); }
  bool has_normals() const { return !normals.empty(); }
  /// Throws std::invalid_argument when positions repeat or normals are not
  /// unit length.
  void validate() const;

  /// count transducers equally spaced on a circle, first one at angle 0.
  static TransducerArray circle(Vec2 centre, double radius, int count);
};

/// Closed convex curve around the region of interest.
class RoiBoundary {
 public:
  using Curve = std::function<Vec2(double)>;

  RoiBoundary() = default;
  /// Samples a closed curve parametrised on [0, 1) counter-clockwise.
  RoiBoundary(Curve curve, int samples);

  static RoiBoundary circle(Vec2 centre, double radius, int samples = 8192);

  std::span<const Vec2> samples() const { return samples_; }
  std::span<const Vec2> normals() const { return normals_; }
  double d_roi() const { return d_roi_; }
  double perimeter() const { return arc_.back(); }
  Vec2 centroid() const;

  bool contains(Vec2 p) const;
  bool is_convex() const;
  /// Position on the exact curve at arc length s along the sampled polygon.
  Vec2 point_at_arc(double s) const;
  Vec2 normal_at_arc(double s) const;
  /// Evaluates the underlying curve (parameter in [0, 1)).
  Vec2 curve(double t) const { return curve_(t - std::floor(t)); }

 private:
  double param_at_arc(double s) const;

  Curve curve_;
  std::vector<Vec2> samples_;
  std::vector<Vec2> normals_;
  std::vector<double> arc_;  // cumulative arc length, size samples + 1
  double d_roi_ = 0.0;
};

/// Point-in-polygon test for a convex counter-clockwise polygon, O(log n).
bool convex_contains(std::span<const Vec2> polygon, Vec2 p);
/// Cross-product sign test on consecutive edges.
bool polygon_is_convex(std::span<const Vec2> polygon);
/// Andrew's monotone chain; counter-clockwise, no repeated end point.
std::vector<Vec2> convex_hull(std::vector<Vec2> points);

}  // namespace vert
