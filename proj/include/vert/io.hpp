// Copyright 2026 The verttomo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <string>

#include "vert/geometry.hpp"

namespace vert {

/// "VGRID" file: ASCII header lines (magic, nx, ny, spacing, origin_x,
/// origin_y), then nx*ny little-endian float32 speeds, row-major, y outer.
void write_vgrid(const VelocityField& field, const std::filesystem::path& path);
VelocityField read_vgrid(const std::filesystem::path& path);

namespace detail {

// Little-endian scalar I/O shared by the binary formats.
void write_le_f32(std::ostream& os, float v);
void write_le_f64(std::ostream& os, double v);
float read_le_f32(std::istream& is);
void write_le_f32_array(std::ostream& os, std::span<const float> v);
void read_le_f32_array(std::istream& is, std::span<float> v);
double read_le_f64(std::istream& is);
std::string read_header_line(std::istream& is, const std::string& what);
std::string format_double(double v);

}  // namespace detail

/// FNV-1a 64-bit hash, used for artifact cache keys.
std::uint64_t fnv1a(std::string_view data, std::uint64_t seed = 14695981039346656037ull);

}  // namespace vert
