#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace biham {

enum class Boundary { Periodic, Decaying };

/// Uniform 1-D grid. Periodic grids cover [0, L) with equal quadrature
/// weights h; decaying grids cover [-L/2, L/2) with endpoint-halved weights
/// and assume fields are negligible near both ends.
class Grid1D {
 public:
  Grid1D() = default;

  static Grid1D make(double length, int points, Boundary mode);

  double length() const { return length_; }
  int points() const { return points_; }
  double spacing() const { return spacing_; }
  Boundary mode() const { return mode_; }
  double origin() const { return origin_; }

  double x(int i) const { return origin_ + i * spacing_; }
  double center() const { return origin_ + 0.5 * length_; }
  bool periodic() const { return mode_ == Boundary::Periodic; }

  /// Quadrature weight of sample i.
  double weight(int i) const {
    if (mode_ == Boundary::Decaying && (i == 0 || i == points_ - 1))
      return 0.5 * spacing_;
    return spacing_;
  }

  bool operator==(const Grid1D&) const = default;

 private:
  double length_ = 0.0;
  int points_ = 0;
  double spacing_ = 0.0;
  double origin_ = 0.0;
  Boundary mode_ = Boundary::Periodic;
};

/// Convenience alias for the spec-level constructor.
Grid1D make_grid(double length, int points, Boundary mode);

/// Real scalar field sampled on a Grid1D. Immutable by convention once built.
class RealField {
 public:
  RealField() = default;
  RealField(Grid1D grid, std::vector<double> samples);

  static RealField zeros(const Grid1D& grid);
  static RealField constant(const Grid1D& grid, double value);
  static RealField from_fn(const Grid1D& grid, const std::function<double(double)>& f);

  const Grid1D& grid() const { return grid_; }
  int size() const { return static_cast<int>(samples_.size()); }
  double operator[](int i) const { return samples_[i]; }
  double& operator[](int i) { return samples_[i]; }
  const std::vector<double>& samples() const { return samples_; }
  std::vector<double>& samples() { return samples_; }

  bool all_finite() const;

 private:
  Grid1D grid_;
  std::vector<double> samples_;
};

RealField operator+(const RealField& a, const RealField& b);
RealField operator-(const RealField& a, const RealField& b);
RealField operator-(const RealField& a);
RealField operator*(double s, const RealField& f);
RealField hadamard(const RealField& a, const RealField& b);

/// Pair of real fields (q, p) on a shared grid: the realified wave function
/// q = Re psi, p = Im psi.
struct PhasePair {
  RealField q;
  RealField p;

  PhasePair() = default;
  PhasePair(RealField q_in, RealField p_in);

  const Grid1D& grid() const { return q.grid(); }
  static PhasePair zeros(const Grid1D& grid);
};

PhasePair operator+(const PhasePair& a, const PhasePair& b);
PhasePair operator-(const PhasePair& a, const PhasePair& b);
PhasePair operator*(double s, const PhasePair& u);

/// Pointwise global phase rotation (q, p) -> (q cos t - p sin t, q sin t + p cos t).
PhasePair rotate(const PhasePair& u, double theta);

void require_same_grid(const Grid1D& a, const Grid1D& b, const char* what);

}  // namespace biham
