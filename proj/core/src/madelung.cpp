#include "biham/madelung.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "biham/calculus.hpp"
#include "biham/dynamics.hpp"

namespace biham {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kErode = 6;  // stencil halfwidth + margin

double wrap_to_pi(double d) {
  while (d > kPi) d -= 2.0 * kPi;
  while (d <= -kPi) d += 2.0 * kPi;
  return d;
}

int leftmost_masked(const std::vector<bool>& mask) {
  for (int i = 0; i < static_cast<int>(mask.size()); ++i)
    if (mask[i]) return i;
  throw std::runtime_error("madelung: state is everywhere below the density floor");
}

std::vector<bool> erode(const std::vector<bool>& mask, bool periodic) {
  const int n = static_cast<int>(mask.size());
  std::vector<bool> out(n, false);
  for (int i = 0; i < n; ++i) {
    bool keep = true;
    for (int d = -kErode; d <= kErode && keep; ++d) {
      int j = i + d;
      if (periodic)
        j = (j % n + n) % n;
      else if (j < 0 || j >= n) {
        keep = false;
        break;
      }
      keep = mask[j];
    }
    out[i] = keep;
  }
  return out;
}

// pi_x, with the winding part split off first on periodic grids (the
// unwrapped phase of a travelling wave is not periodic, the remainder is).
RealField scaled_phase_derivative(const RealField& pi_field) {
  const Grid1D& g = pi_field.grid();
  if (!g.periodic()) return derivative(pi_field, 1);
  const int n = g.points();
  const double span = 2.0 * (pi_field[n - 1] - pi_field[0]);
  const long winding = std::lround(span * n / ((n - 1) * 2.0 * kPi));
  const double slope = 2.0 * kPi * winding / g.length();
  RealField periodic_part = pi_field;
  for (int i = 0; i < n; ++i) periodic_part[i] = 2.0 * pi_field[i] - slope * (g.x(i) - g.origin());
  RealField out = derivative(periodic_part, 1);
  for (int i = 0; i < n; ++i) out[i] = 0.5 * (out[i] + slope);
  return out;
}

}  // namespace

MadelungFields madelung_from_state(const PhasePair& u, double hbar, double mass, double floor) {
  if (!(floor > 0.0)) throw std::invalid_argument("madelung_from_state: floor must be positive");
  const Grid1D& g = u.grid();
  const int n = g.points();

  MadelungFields out;
  out.chi = RealField::zeros(g);
  double chi_max = 0.0;
  for (int i = 0; i < n; ++i) {
    out.chi[i] = u.q[i] * u.q[i] + u.p[i] * u.p[i];
    chi_max = std::max(chi_max, out.chi[i]);
  }
  out.floor_abs = floor * chi_max;
  out.mask.assign(n, false);
  for (int i = 0; i < n; ++i) out.mask[i] = out.chi[i] >= out.floor_abs;

  const int anchor = leftmost_masked(out.mask);
  std::vector<double> wrapped(n);
  for (int i = 0; i < n; ++i) wrapped[i] = std::atan2(u.p[i], u.q[i]);
  std::vector<double> theta(n, 0.0);
  theta[anchor] = wrapped[anchor];
  for (int i = anchor + 1; i < n; ++i)
    theta[i] = theta[i - 1] + wrap_to_pi(wrapped[i] - wrapped[i - 1]);
  for (int i = anchor - 1; i >= 0; --i)
    theta[i] = theta[i + 1] + wrap_to_pi(wrapped[i] - wrapped[i + 1]);

  // Constant extension outside the mask keeps the phase derivative clean near
  // the mask edges; the flag is the contract for everything beyond them.
  int last_masked = anchor;
  for (int i = anchor; i < n; ++i) {
    if (out.mask[i]) last_masked = i;
    else theta[i] = theta[last_masked];
  }
  last_masked = anchor;
  for (int i = anchor; i >= 0; --i) {
    if (out.mask[i]) last_masked = i;
    else theta[i] = theta[last_masked];
  }

  out.pi = RealField::zeros(g);
  for (int i = 0; i < n; ++i) out.pi[i] = 0.5 * theta[i];

  // chi theta_x written through the pointwise identity chi theta_x = q p_x - p q_x.
  const RealField px = derivative(u.p, 1);
  const RealField qx = derivative(u.q, 1);
  out.current = RealField::zeros(g);
  for (int i = 0; i < n; ++i)
    out.current[i] = out.mask[i] ? (hbar / mass) * (u.q[i] * px[i] - u.p[i] * qx[i]) : 0.0;
  return out;
}

MadelungRates madelung_rhs(const MadelungFields& fields, const RealField& potential, double hbar,
                           double mass) {
  require_same_grid(fields.chi.grid(), potential.grid(), "madelung_rhs");
  const Grid1D& g = fields.chi.grid();
  const int n = g.points();

  RealField sqrt_chi = fields.chi;
  for (int i = 0; i < n; ++i) sqrt_chi[i] = std::sqrt(std::max(fields.chi[i], 0.0));
  const RealField lap_sqrt = derivative(sqrt_chi, 2);
  const RealField pix = scaled_phase_derivative(fields.pi);

  MadelungRates out;
  out.mask = fields.mask;
  out.dpi = RealField::zeros(g);
  for (int i = 0; i < n; ++i) {
    if (!fields.mask[i]) continue;
    out.dpi[i] = (hbar / (2.0 * mass)) * lap_sqrt[i] / sqrt_chi[i] -
                 (hbar / mass) * pix[i] * pix[i] - potential[i] / hbar;
  }

  const RealField flux = hadamard(fields.chi, pix);
  const RealField dflux = derivative(flux, 1);
  out.dchi = RealField::zeros(g);
  for (int i = 0; i < n; ++i)
    if (fields.mask[i]) out.dchi[i] = -(2.0 * hbar / mass) * dflux[i];
  return out;
}

MadelungConsistency madelung_consistency(const PhasePair& u, const SchrodingerOperator& op,
                                         double dt, double floor) {
  const double hbar = op.hbar();
  const double mass = op.mass();
  const MadelungFields m0 = madelung_from_state(u, hbar, mass, floor);
  const MadelungRates rates = madelung_rhs(m0, op.potential(), hbar, mass);

  const PhasePair up = step_lse(u, op, dt, Scheme::Rk4);
  const PhasePair um = step_lse(u, op, -dt, Scheme::Rk4);
  const MadelungFields mp = madelung_from_state(up, hbar, mass, floor);
  const MadelungFields mm = madelung_from_state(um, hbar, mass, floor);

  const int n = u.grid().points();
  std::vector<bool> common(n);
  for (int i = 0; i < n; ++i) common[i] = m0.mask[i] && mp.mask[i] && mm.mask[i];
  const std::vector<bool> eroded = erode(common, u.grid().periodic());

  const int anchor = leftmost_masked(eroded);
  // The unwrap of each snapshot may differ by a global multiple of pi.
  const double off_p = std::round((mp.pi[anchor] - m0.pi[anchor]) / kPi) * kPi;
  const double off_m = std::round((mm.pi[anchor] - m0.pi[anchor]) / kPi) * kPi;

  MadelungConsistency out;
  for (int i = 0; i < n; ++i) {
    if (!eroded[i]) {
      ++out.masked_points;
      continue;
    }
    const double dchi_fd = (mp.chi[i] - mm.chi[i]) / (2.0 * dt);
    const double dpi_fd = ((mp.pi[i] - off_p) - (mm.pi[i] - off_m)) / (2.0 * dt);
    out.chi_residual = std::max(out.chi_residual, std::abs(dchi_fd - rates.dchi[i]));
    out.pi_residual = std::max(out.pi_residual, std::abs(dpi_fd - rates.dpi[i]));
  }
  out.residual = std::max(out.chi_residual, out.pi_residual);
  return out;
}

}  // namespace biham
