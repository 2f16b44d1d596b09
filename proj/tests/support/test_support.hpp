#pragma once

// Shared helpers for the unit and acceptance suites. The oracles here are
// deliberately independent of the library code paths they check: dense
// diagonalization goes through Eigen, reference quadrature is a plain
// high-resolution sum.

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <utility>

#include "biham/calculus.hpp"
#include "biham/grid.hpp"
#include "biham/schrodinger.hpp"

namespace biham::test {

/// Dense matrix of the discretized Schrodinger operator, built column by
/// column from unit vectors.
inline Eigen::MatrixXd dense_operator_matrix(const SchrodingerOperator& op) {
  const int n = op.grid().points();
  Eigen::MatrixXd m(n, n);
  for (int j = 0; j < n; ++j) {
    RealField e = RealField::zeros(op.grid());
    e[j] = 1.0;
    const RealField col = op.apply(e);
    for (int i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

/// Lowest eigenpair of the discretized operator (Eigen oracle), eigenvector
/// normalized to unit quadrature norm.
inline std::pair<double, RealField> dense_ground_state(const SchrodingerOperator& op) {
  Eigen::MatrixXd m = dense_operator_matrix(op);
  m = 0.5 * (m + m.transpose().eval());  // symmetrize away closure asymmetry
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  const int n = op.grid().points();
  RealField v = RealField::zeros(op.grid());
  for (int i = 0; i < n; ++i) v[i] = solver.eigenvectors()(i, 0);
  const double s = norm(v);
  for (int i = 0; i < n; ++i) v[i] /= s;
  return {solver.eigenvalues()(0), v};
}

/// k-th eigenpair, same conventions.
inline std::pair<double, RealField> dense_eigenstate(const SchrodingerOperator& op, int k) {
  Eigen::MatrixXd m = dense_operator_matrix(op);
  m = 0.5 * (m + m.transpose().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  const int n = op.grid().points();
  RealField v = RealField::zeros(op.grid());
  for (int i = 0; i < n; ++i) v[i] = solver.eigenvectors()(i, k);
  const double s = norm(v);
  for (int i = 0; i < n; ++i) v[i] /= s;
  return {solver.eigenvalues()(k), v};
}

/// Reference quadrature: endpoint-halved trapezoid at much higher resolution,
/// summed directly.
inline double reference_integral(const std::function<double(double)>& f, double a, double b,
                                 int n = 200001) {
  const double h = (b - a) / (n - 1);
  double acc = 0.5 * (f(a) + f(b));
  for (int i = 1; i < n - 1; ++i) acc += f(a + i * h);
  return acc * h;
}

/// Gaussian wave packet exp(-(x-c)^2/(2 w^2)) exp(i k x), unnormalized.
inline PhasePair gaussian_packet(const Grid1D& g, double center, double width, double momentum) {
  RealField q = RealField::from_fn(g, [&](double x) {
    const double d = (x - center) / width;
    return std::exp(-0.5 * d * d) * std::cos(momentum * x);
  });
  RealField p = RealField::from_fn(g, [&](double x) {
    const double d = (x - center) / width;
    return std::exp(-0.5 * d * d) * std::sin(momentum * x);
  });
  return PhasePair(std::move(q), std::move(p));
}

/// sech(x - c) profile with an optional linear phase.
inline PhasePair sech_state(const Grid1D& g, double center, double phase_slope) {
  RealField q = RealField::from_fn(g, [&](double x) {
    return std::cos(phase_slope * x) / std::cosh(x - center);
  });
  RealField p = RealField::from_fn(g, [&](double x) {
    return std::sin(phase_slope * x) / std::cosh(x - center);
  });
  return PhasePair(std::move(q), std::move(p));
}

}  // namespace biham::test
