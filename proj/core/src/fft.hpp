#pragma once

// Thin FFTW3 wrapper with a per-size plan cache. Plan creation is serialized
// (the FFTW planner is not thread-safe); execution uses the new-array API so
// concurrent transforms on distinct buffers are safe.

#include <complex>
#include <vector>

namespace biham::fft {

// Real-to-halfcomplex transform, out has n/2 + 1 entries, unnormalized.
void forward_r2c(const std::vector<double>& in, std::vector<std::complex<double>>& out);

// Inverse of forward_r2c, normalized by 1/n.
void inverse_c2r(const std::vector<std::complex<double>>& in, std::vector<double>& out, int n);

// Complex transforms; inverse is normalized by 1/n.
void forward_c2c(const std::vector<std::complex<double>>& in,
                 std::vector<std::complex<double>>& out);
void inverse_c2c(const std::vector<std::complex<double>>& in,
                 std::vector<std::complex<double>>& out);

}  // namespace biham::fft
