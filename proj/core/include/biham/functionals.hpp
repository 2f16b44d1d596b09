#pragma once

#include <memory>
#include <string>
#include <vector>

#include "biham/calculus.hpp"
#include "biham/grid.hpp"
#include "biham/poisson.hpp"
#include "biham/schrodinger.hpp"

namespace biham {

/// The conserved functionals of the two towers, with analytic gradients.
///
///   Hn      (1/2) int (p H^n p + q H^n q)
///   K_{-1}  (1/2) int (p^2 + q^2)
///   K0      (hbar/sqrt(2m)) int q p_x
///   K1      (1/2) int { (hbar^2/2m)(p_x^2 + q_x^2) + (b/2)(p^2 + q^2)^2 }
class FunctionalSpec {
 public:
  enum class Kind { Hn, Kminus1, K0, K1 };

  static FunctionalSpec Hn(int n, SchrodingerOperator op);
  static FunctionalSpec Kminus1();
  static FunctionalSpec K0(double hbar, double mass);
  static FunctionalSpec K1(double hbar, double mass, double b);

  Kind kind() const { return kind_; }
  int order() const { return n_; }
  std::string name() const;

  double value(const PhasePair& u) const;
  PhasePair gradient(const PhasePair& u) const;

  /// Value as a plain functional, for the finite-difference machinery.
  FunctionalFn evaluator() const;

 private:
  FunctionalSpec() = default;
  Kind kind_ = Kind::Kminus1;
  int n_ = 0;
  double hbar_ = 1.0;
  double mass_ = 1.0;
  double b_ = 0.0;
  std::shared_ptr<const SchrodingerOperator> op_;
};

/// Entry (i, j) = {specs[i], specs[j]} under P, evaluated at u.
std::vector<std::vector<double>> involution_matrix(const std::vector<FunctionalSpec>& specs,
                                                   const PoissonStructure& P, const PhasePair& u);

/// Largest bracket entry normalized per pair by max(1, |gradF| |P gradG|);
/// the figure the involution tests bound.
double involution_max_normalized(const std::vector<FunctionalSpec>& specs,
                                 const PoissonStructure& P, const PhasePair& u);

/// |grad H_{n+1} - T grad H_n| / |grad H_{n+1}| for n = 0..n_max.
std::vector<double> linear_recursion_residuals(const PhasePair& u, const SchrodingerOperator& op,
                                               int n_max = 3);

struct NlsRecursionReport {
  double c = 1.0;                  // fitted normalization constant
  std::vector<double> residuals;   // links n = -1 and n = 0
};

/// Residuals |c T_N grad K_n - grad K_{n+1}| / |grad K_{n+1}| for n in {-1, 0},
/// with the single constant c fitted by least squares over both links.
NlsRecursionReport nls_recursion_residuals(const PhasePair& u, double hbar, double mass, double b);

}  // namespace biham
