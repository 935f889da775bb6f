// Copyright 2026 The verttomo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace vert {

/// Smallest power of two >= n (n >= 1).
std::size_t next_pow2(std::size_t n);

/// Smallest even n' >= n whose only prime factors are 2, 3 and 5.
std::size_t next_fast_size(std::size_t n);

/// Real-to-complex FFT of x zero-padded to n_fft (even); returns the
/// n_fft / 2 + 1 non-negative frequency bins, forward sign exp(-i w t).
std::vector<std::complex<double>> rfft(std::span<const double> x, std::size_t n_fft);
/// Inverse of rfft; returns n_fft real samples.
std::vector<double> irfft(std::span<const std::complex<double>> spec, std::size_t n_fft);

/// |analytic signal| by one-sided spectral doubling, zero-padded to at least
/// twice the input length.
std::vector<double> analytic_envelope(std::span<const double> x);

}  // namespace vert
