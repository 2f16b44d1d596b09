#pragma once

#include <string>
#include <variant>
#include <vector>

#include "biham/functionals.hpp"
#include "biham/grid.hpp"
#include "biham/schrodinger.hpp"

namespace biham {

enum class Scheme { StrangSplit, Rk4 };

struct IntegratorSpec {
  Scheme scheme = Scheme::StrangSplit;
  double dt = 1e-3;
  long steps = 1;
  long stride = 10;  // checkpoint every `stride` steps
};

/// One step of i hbar psi_t = H psi. Strang splitting (half potential phase,
/// full Fourier kinetic phase, half potential phase) requires a periodic
/// grid; rk4 works on either boundary mode.
PhasePair step_lse(const PhasePair& u, const SchrodingerOperator& op, double dt,
                   Scheme scheme = Scheme::StrangSplit);

/// One step of i hbar psi_t = -(hbar^2/2m) psi_xx + b |psi|^2 psi. The
/// nonlinear substep is the exact pointwise phase rotation by -b|psi|^2 dt/hbar.
PhasePair step_nls(const PhasePair& u, double hbar, double mass, double b, double dt,
                   Scheme scheme = Scheme::StrangSplit);

struct LinearSchrodinger {
  SchrodingerOperator op;
};

struct NonlinearSchrodinger {
  double hbar = 1.0;
  double mass = 0.5;
  double b = -2.0;
};

using Evolution = std::variant<LinearSchrodinger, NonlinearSchrodinger>;

/// Time series of monitored functionals along a trajectory, with checkpoint
/// states and per-functional drift statistics.
struct TrajectoryRecord {
  std::vector<double> times;
  std::vector<std::string> names;
  std::vector<std::vector<double>> series;  // one row per functional
  std::vector<PhasePair> checkpoints;

  /// max_t |f(t) - f(0)| / max(|f(0)|, 1).
  double drift(int functional_index) const;
  double drift(const std::string& name) const;
};

/// Advances u0 and samples every monitored functional at the checkpoints
/// (t = 0, every `stride` steps, and the final step). Aborts with a
/// diagnostic if the state stops being finite.
TrajectoryRecord run(const Evolution& ev, const PhasePair& u0, const IntegratorSpec& integ,
                     const std::vector<FunctionalSpec>& monitored);

}  // namespace biham
