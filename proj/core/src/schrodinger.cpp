#include "biham/schrodinger.hpp"

#include <stdexcept>

#include "biham/calculus.hpp"

namespace biham {

SchrodingerOperator::SchrodingerOperator(double hbar, double mass, RealField potential)
    : hbar_(hbar), mass_(mass), potential_(std::move(potential)) {
  if (!(hbar > 0.0)) throw std::invalid_argument("SchrodingerOperator: hbar must be positive");
  if (!(mass > 0.0)) throw std::invalid_argument("SchrodingerOperator: mass must be positive");
  if (!potential_.all_finite())
    throw std::invalid_argument("SchrodingerOperator: potential must be finite");
}

RealField SchrodingerOperator::apply(const RealField& f) const {
  require_same_grid(f.grid(), grid(), "SchrodingerOperator::apply");
  const double kin = -hbar_ * hbar_ / (2.0 * mass_);
  RealField out = derivative(f, 2);
  for (int i = 0; i < out.size(); ++i) out[i] = kin * out[i] + potential_[i] * f[i];
  return out;
}

RealField SchrodingerOperator::apply_power(const RealField& f, int n) const {
  if (n < 0) throw std::invalid_argument("SchrodingerOperator::apply_power: n must be >= 0");
  RealField out = f;
  for (int k = 0; k < n; ++k) out = apply(out);
  return out;
}

RealField zero_potential(const Grid1D& grid) { return RealField::zeros(grid); }

RealField harmonic_potential(const Grid1D& grid, double mass, double omega) {
  const double xc = grid.center();
  return RealField::from_fn(grid, [=](double x) {
    const double d = x - xc;
    return 0.5 * mass * omega * omega * d * d;
  });
}

}  // namespace biham
