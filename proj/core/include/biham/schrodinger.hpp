#pragma once

#include "biham/grid.hpp"

namespace biham {

/// H = -(hbar^2/2m) d^2/dx^2 + U(x), acting componentwise on real fields.
class SchrodingerOperator {
 public:
  SchrodingerOperator(double hbar, double mass, RealField potential);

  double hbar() const { return hbar_; }
  double mass() const { return mass_; }
  const RealField& potential() const { return potential_; }
  const Grid1D& grid() const { return potential_.grid(); }

  RealField apply(const RealField& f) const;
  /// apply() iterated n times, n >= 0.
  RealField apply_power(const RealField& f, int n) const;

 private:
  double hbar_;
  double mass_;
  RealField potential_;
};

RealField zero_potential(const Grid1D& grid);

/// U(x) = (1/2) m omega^2 (x - xc)^2 centered on the domain midpoint.
RealField harmonic_potential(const Grid1D& grid, double mass, double omega);

}  // namespace biham
