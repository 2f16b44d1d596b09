#pragma once

#include <vector>

#include "biham/grid.hpp"
#include "biham/schrodinger.hpp"

namespace biham {

/// Hydrodynamic variables of psi = A exp(i theta): density chi = A^2, scaled
/// phase pi = theta/2 (the S/(2 hbar) combination with S = hbar theta), and
/// probability current J = (hbar/m) chi theta_x.
///
/// The Madelung variables are singular at nodes, so everything is reported
/// relative to a density mask chi >= floor * max(chi). The phase is unwrapped
/// along the grid anchored at the leftmost masked point and constant-extended
/// outside the mask; the current is zeroed there.
struct MadelungFields {
  RealField chi;
  RealField pi;
  RealField current;
  std::vector<bool> mask;
  double floor_abs = 0.0;
};

MadelungFields madelung_from_state(const PhasePair& u, double hbar, double mass,
                                   double floor = 1e-8);

struct MadelungRates {
  RealField dchi;  // -(2 hbar / m) d/dx (chi pi_x)
  RealField dpi;   // (hbar/2m) Lap(sqrt chi)/sqrt chi - (hbar/m) pi_x^2 - U/hbar
  std::vector<bool> mask;
};

/// Right-hand side of the hydrodynamic form, evaluated with the module
/// derivatives. Values outside the density mask are zeroed.
MadelungRates madelung_rhs(const MadelungFields& fields, const RealField& potential, double hbar,
                           double mass);

struct MadelungConsistency {
  double residual = 0.0;      // max of the two component residuals
  double chi_residual = 0.0;  // sup-norm over the eroded mask
  double pi_residual = 0.0;
  int masked_points = 0;      // points excluded from the comparison
};

/// Compares madelung_rhs against the time-differenced transform along the
/// Schrodinger flow (rk4, small dt), sup-norm over the eroded density mask.
MadelungConsistency madelung_consistency(const PhasePair& u, const SchrodingerOperator& op,
                                         double dt = 1e-5, double floor = 1e-8);

}  // namespace biham
