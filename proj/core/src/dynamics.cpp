#include "biham/dynamics.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "biham/calculus.hpp"
#include "fft.hpp"

namespace biham {
namespace {

using cplx = std::complex<double>;

std::vector<cplx> to_complex(const PhasePair& u) {
  std::vector<cplx> psi(u.grid().points());
  for (int i = 0; i < static_cast<int>(psi.size()); ++i) psi[i] = cplx(u.q[i], u.p[i]);
  return psi;
}

PhasePair from_complex(const Grid1D& g, const std::vector<cplx>& psi) {
  RealField q = RealField::zeros(g), p = RealField::zeros(g);
  for (int i = 0; i < g.points(); ++i) {
    q[i] = psi[i].real();
    p[i] = psi[i].imag();
  }
  return PhasePair(std::move(q), std::move(p));
}

// Exact kinetic flow over dt: multiply mode k by exp(-i hbar k^2 dt / 2m).
void kinetic_phase(std::vector<cplx>& psi, const Grid1D& g, double hbar, double mass, double dt) {
  const int n = g.points();
  std::vector<cplx> hat;
  fft::forward_c2c(psi, hat);
  const double dk = 2.0 * std::numbers::pi / g.length();
  for (int j = 0; j < n; ++j) {
    const int kidx = (j <= n / 2) ? j : j - n;
    const double k = dk * kidx;
    hat[j] *= std::exp(cplx(0.0, -hbar * k * k * dt / (2.0 * mass)));
  }
  fft::inverse_c2c(hat, psi);
}

PhasePair step_lse_strang(const PhasePair& u, const SchrodingerOperator& op, double dt) {
  if (!u.grid().periodic())
    throw std::invalid_argument("step_lse: strang splitting needs a periodic grid");
  std::vector<cplx> psi = to_complex(u);
  const RealField& U = op.potential();
  const double hbar = op.hbar();
  for (int i = 0; i < static_cast<int>(psi.size()); ++i)
    psi[i] *= std::exp(cplx(0.0, -U[i] * dt / (2.0 * hbar)));
  kinetic_phase(psi, u.grid(), hbar, op.mass(), dt);
  for (int i = 0; i < static_cast<int>(psi.size()); ++i)
    psi[i] *= std::exp(cplx(0.0, -U[i] * dt / (2.0 * hbar)));
  return from_complex(u.grid(), psi);
}

PhasePair step_nls_strang(const PhasePair& u, double hbar, double mass, double b, double dt) {
  if (!u.grid().periodic())
    throw std::invalid_argument("step_nls: strang splitting needs a periodic grid");
  std::vector<cplx> psi = to_complex(u);
  auto nonlinear_half = [&](std::vector<cplx>& v) {
    for (auto& z : v) {
      const double rho = std::norm(z);
      z *= std::exp(cplx(0.0, -b * rho * dt / (2.0 * hbar)));
    }
  };
  nonlinear_half(psi);
  kinetic_phase(psi, u.grid(), hbar, mass, dt);
  nonlinear_half(psi);
  return from_complex(u.grid(), psi);
}

// qdot = H p / hbar, pdot = -H q / hbar.
PhasePair lse_rhs(const PhasePair& u, const SchrodingerOperator& op) {
  const double inv = 1.0 / op.hbar();
  return PhasePair(inv * op.apply(u.p), -1.0 * inv * op.apply(u.q));
}

PhasePair nls_rhs(const PhasePair& u, double hbar, double mass, double b) {
  const double kin = hbar / (2.0 * mass);
  RealField qdot = -kin * derivative(u.p, 2);
  RealField pdot = kin * derivative(u.q, 2);
  for (int i = 0; i < qdot.size(); ++i) {
    const double rho = u.q[i] * u.q[i] + u.p[i] * u.p[i];
    qdot[i] += (b / hbar) * rho * u.p[i];
    pdot[i] -= (b / hbar) * rho * u.q[i];
  }
  return PhasePair(std::move(qdot), std::move(pdot));
}

template <typename Rhs>
PhasePair rk4_step(const PhasePair& u, double dt, const Rhs& rhs) {
  const PhasePair k1 = rhs(u);
  const PhasePair k2 = rhs(u + (0.5 * dt) * k1);
  const PhasePair k3 = rhs(u + (0.5 * dt) * k2);
  const PhasePair k4 = rhs(u + dt * k3);
  return u + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

PhasePair step_lse(const PhasePair& u, const SchrodingerOperator& op, double dt, Scheme scheme) {
  require_same_grid(u.grid(), op.grid(), "step_lse");
  if (dt == 0.0) return u;
  if (scheme == Scheme::StrangSplit) return step_lse_strang(u, op, dt);
  return rk4_step(u, dt, [&](const PhasePair& v) { return lse_rhs(v, op); });
}

PhasePair step_nls(const PhasePair& u, double hbar, double mass, double b, double dt,
                   Scheme scheme) {
  if (dt == 0.0) return u;
  if (scheme == Scheme::StrangSplit) return step_nls_strang(u, hbar, mass, b, dt);
  return rk4_step(u, dt, [&](const PhasePair& v) { return nls_rhs(v, hbar, mass, b); });
}

double TrajectoryRecord::drift(int functional_index) const {
  const auto& s = series.at(functional_index);
  if (s.empty()) return 0.0;
  const double f0 = s.front();
  double worst = 0.0;
  for (double v : s) worst = std::max(worst, std::abs(v - f0));
  return worst / std::max(std::abs(f0), 1.0);
}

double TrajectoryRecord::drift(const std::string& name) const {
  for (int i = 0; i < static_cast<int>(names.size()); ++i)
    if (names[i] == name) return drift(i);
  throw std::invalid_argument("TrajectoryRecord::drift: no functional named " + name);
}

TrajectoryRecord run(const Evolution& ev, const PhasePair& u0, const IntegratorSpec& integ,
                     const std::vector<FunctionalSpec>& monitored) {
  if (!(integ.dt > 0.0)) throw std::invalid_argument("run: dt must be positive");
  if (integ.steps < 1) throw std::invalid_argument("run: steps must be >= 1");
  const long stride = std::max<long>(1, integ.stride);

  TrajectoryRecord rec;
  rec.names.reserve(monitored.size());
  for (const auto& f : monitored) rec.names.push_back(f.name());
  rec.series.resize(monitored.size());

  auto step_once = [&](const PhasePair& u) {
    if (std::holds_alternative<LinearSchrodinger>(ev))
      return step_lse(u, std::get<LinearSchrodinger>(ev).op, integ.dt, integ.scheme);
    const auto& n = std::get<NonlinearSchrodinger>(ev);
    return step_nls(u, n.hbar, n.mass, n.b, integ.dt, integ.scheme);
  };

  auto record = [&](const PhasePair& u, long step) {
    if (!u.q.all_finite() || !u.p.all_finite())
      throw std::runtime_error("run: state is not finite at step " + std::to_string(step));
    rec.times.push_back(step * integ.dt);
    for (std::size_t i = 0; i < monitored.size(); ++i)
      rec.series[i].push_back(monitored[i].value(u));
    rec.checkpoints.push_back(u);
  };

  PhasePair u = u0;
  record(u, 0);
  for (long s = 1; s <= integ.steps; ++s) {
    u = step_once(u);
    if (s % stride == 0 || s == integ.steps) record(u, s);
  }
  return rec;
}

}  // namespace biham
