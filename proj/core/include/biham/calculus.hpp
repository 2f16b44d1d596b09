#pragma once

#include <functional>

#include "biham/grid.hpp"

namespace biham {

using FunctionalFn = std::function<double(const PhasePair&)>;

/// Quadrature: sum of w_i f_i. Spectrally accurate for periodic band-limited
/// fields; trapezoid with endpoint halving on decaying grids.
double integrate(const RealField& f);

/// Quadrature-weighted inner products and norms.
double inner(const RealField& a, const RealField& b);
double inner(const PhasePair& a, const PhasePair& b);
double norm(const RealField& f);
double norm(const PhasePair& u);
double linf(const RealField& f);
double linf(const PhasePair& u);

/// d^order/dx^order, order in {1,2,3,4}. Periodic grids differentiate in
/// Fourier space; decaying grids use 9-point centered stencils with one-sided
/// closures at the ends.
RealField derivative(const RealField& f, int order);

/// Skew antiderivative (1/2)(int_{-inf}^x - int_x^{inf}).
///
/// Decaying grids: trapezoid partial sums with Euler-Maclaurin endpoint
/// corrections (the plain trapezoid kernel is only O(h^2) at the moving
/// endpoint). Periodic grids: division by ik on nonzero modes; the input must
/// have zero mean or the inversion is ill-posed and an exception is thrown.
RealField dminus1(const RealField& f);

/// Central finite-difference gradient of a functional with respect to the
/// quadrature-weighted inner product: F(u + e d_i) - F(u - e d_i) ~ 2 e w_i g_i.
/// eps is scaled internally by max(1, |u|_inf).
PhasePair fd_gradient(const FunctionalFn& F, const PhasePair& u, double eps = 1e-5);

}  // namespace biham
