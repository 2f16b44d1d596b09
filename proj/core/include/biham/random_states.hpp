#pragma once

#include <cstdint>

#include "biham/grid.hpp"

namespace biham {

/// Seeded random state on a periodic grid with the top third of the spectrum
/// zeroed, normalized to unit quadrature norm. Band-limiting keeps spectral
/// residual tests sensitive to structure errors rather than discretization
/// noise. zero_mean additionally removes the k = 0 component of both fields.
PhasePair random_band_limited(const Grid1D& grid, std::uint64_t seed, bool zero_mean = false);

/// Seeded smooth random state on a decaying grid: a Gaussian envelope times a
/// low-order random trigonometric polynomial, normalized to unit norm.
PhasePair random_smooth_decaying(const Grid1D& grid, std::uint64_t seed);

}  // namespace biham
