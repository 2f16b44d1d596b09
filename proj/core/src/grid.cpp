#include "biham/grid.hpp"

#include <cmath>
#include <string>

namespace biham {

Grid1D Grid1D::make(double length, int points, Boundary mode) {
  if (!(length > 0.0))
    throw std::invalid_argument("Grid1D: length must be positive");
  if (points < 8)
    throw std::invalid_argument("Grid1D: need at least 8 points");
  if (points % 2 != 0)
    throw std::invalid_argument("Grid1D: point count must be even (spectral transforms)");
  Grid1D g;
  g.length_ = length;
  g.points_ = points;
  g.spacing_ = length / points;
  g.mode_ = mode;
  g.origin_ = (mode == Boundary::Decaying) ? -0.5 * length : 0.0;
  return g;
}

Grid1D make_grid(double length, int points, Boundary mode) {
  return Grid1D::make(length, points, mode);
}

RealField::RealField(Grid1D grid, std::vector<double> samples)
    : grid_(grid), samples_(std::move(samples)) {
  if (static_cast<int>(samples_.size()) != grid_.points())
    throw std::invalid_argument("RealField: sample count does not match grid");
}

RealField RealField::zeros(const Grid1D& grid) {
  return RealField(grid, std::vector<double>(grid.points(), 0.0));
}

RealField RealField::constant(const Grid1D& grid, double value) {
  return RealField(grid, std::vector<double>(grid.points(), value));
}

RealField RealField::from_fn(const Grid1D& grid, const std::function<double(double)>& f) {
  std::vector<double> v(grid.points());
  for (int i = 0; i < grid.points(); ++i) v[i] = f(grid.x(i));
  return RealField(grid, std::move(v));
}

bool RealField::all_finite() const {
  for (double v : samples_)
    if (!std::isfinite(v)) return false;
  return true;
}

void require_same_grid(const Grid1D& a, const Grid1D& b, const char* what) {
  if (!(a == b)) throw std::invalid_argument(std::string(what) + ": grid mismatch");
}

RealField operator+(const RealField& a, const RealField& b) {
  require_same_grid(a.grid(), b.grid(), "RealField::operator+");
  RealField out = a;
  for (int i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

RealField operator-(const RealField& a, const RealField& b) {
  require_same_grid(a.grid(), b.grid(), "RealField::operator-");
  RealField out = a;
  for (int i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

RealField operator-(const RealField& a) {
  RealField out = a;
  for (int i = 0; i < out.size(); ++i) out[i] = -out[i];
  return out;
}

RealField operator*(double s, const RealField& f) {
  RealField out = f;
  for (int i = 0; i < out.size(); ++i) out[i] *= s;
  return out;
}

RealField hadamard(const RealField& a, const RealField& b) {
  require_same_grid(a.grid(), b.grid(), "hadamard");
  RealField out = a;
  for (int i = 0; i < out.size(); ++i) out[i] *= b[i];
  return out;
}

PhasePair::PhasePair(RealField q_in, RealField p_in) : q(std::move(q_in)), p(std::move(p_in)) {
  require_same_grid(q.grid(), p.grid(), "PhasePair");
}

PhasePair PhasePair::zeros(const Grid1D& grid) {
  return PhasePair(RealField::zeros(grid), RealField::zeros(grid));
}

PhasePair operator+(const PhasePair& a, const PhasePair& b) {
  return PhasePair(a.q + b.q, a.p + b.p);
}

PhasePair operator-(const PhasePair& a, const PhasePair& b) {
  return PhasePair(a.q - b.q, a.p - b.p);
}

PhasePair operator*(double s, const PhasePair& u) {
  return PhasePair(s * u.q, s * u.p);
}

PhasePair rotate(const PhasePair& u, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  RealField q = u.q, p = u.p;
  for (int i = 0; i < q.size(); ++i) {
    const double qi = u.q[i], pi = u.p[i];
    q[i] = qi * c - pi * s;
    p[i] = qi * s + pi * c;
  }
  return PhasePair(std::move(q), std::move(p));
}

}  // namespace biham
