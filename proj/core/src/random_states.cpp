#include "biham/random_states.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include "biham/calculus.hpp"
#include "fft.hpp"

namespace biham {
namespace {

RealField field_from_spectrum(const Grid1D& g, std::mt19937_64& rng, bool zero_mean) {
  const int n = g.points();
  const int half = n / 2;
  const int keep = (2 * half) / 3;  // zero the top third of the spectrum
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::complex<double>> hat(half + 1, 0.0);
  hat[0] = zero_mean ? 0.0 : std::complex<double>(gauss(rng), 0.0);
  for (int k = 1; k <= keep; ++k) hat[k] = std::complex<double>(gauss(rng), gauss(rng));
  std::vector<double> samples;
  fft::inverse_c2r(hat, samples, n);
  return RealField(g, std::move(samples));
}

}  // namespace

PhasePair random_band_limited(const Grid1D& grid, std::uint64_t seed, bool zero_mean) {
  if (!grid.periodic())
    throw std::invalid_argument("random_band_limited: needs a periodic grid");
  std::mt19937_64 rng(seed);
  RealField q = field_from_spectrum(grid, rng, zero_mean);
  RealField p = field_from_spectrum(grid, rng, zero_mean);
  PhasePair u(std::move(q), std::move(p));
  const double s = norm(u);
  if (s == 0.0) throw std::runtime_error("random_band_limited: degenerate draw");
  return (1.0 / s) * u;
}

PhasePair random_smooth_decaying(const Grid1D& grid, std::uint64_t seed) {
  if (grid.periodic())
    throw std::invalid_argument("random_smooth_decaying: needs a decaying grid");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double L = grid.length();
  const double sigma = L / 8.0;
  constexpr int kModes = 5;
  double aq[kModes + 1], bq[kModes + 1], ap[kModes + 1], bp[kModes + 1];
  for (int k = 0; k <= kModes; ++k) {
    aq[k] = gauss(rng);
    bq[k] = gauss(rng);
    ap[k] = gauss(rng);
    bp[k] = gauss(rng);
  }
  auto trig = [&](const double* a, const double* b, double x) {
    double acc = 0.0;
    for (int k = 0; k <= kModes; ++k) {
      const double w = 2.0 * std::numbers::pi * k / L;
      acc += a[k] * std::cos(w * x) + b[k] * std::sin(w * x);
    }
    return acc;
  };
  const double xc = grid.center();
  RealField q = RealField::from_fn(grid, [&](double x) {
    const double d = (x - xc) / sigma;
    return std::exp(-0.5 * d * d) * trig(aq, bq, x);
  });
  RealField p = RealField::from_fn(grid, [&](double x) {
    const double d = (x - xc) / sigma;
    return std::exp(-0.5 * d * d) * trig(ap, bp, x);
  });
  PhasePair u(std::move(q), std::move(p));
  const double s = norm(u);
  if (s == 0.0) throw std::runtime_error("random_smooth_decaying: degenerate draw");
  return (1.0 / s) * u;
}

}  // namespace biham
