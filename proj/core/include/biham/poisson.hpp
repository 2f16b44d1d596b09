#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "biham/calculus.hpp"
#include "biham/grid.hpp"
#include "biham/schrodinger.hpp"

namespace biham {

// Conventions, fixed once for the whole library. A covector is a gradient
// pair (dF/dq, dF/dp) stored as a PhasePair; the result of applying a Poisson
// structure is the tangent pair (qdot, pdot). The canonical structure maps
// (a, b) -> (b, -a)/hbar so that the flow of the energy functional reproduces
// the realified Schrodinger equation.
class PoissonStructure {
 public:
  enum class Kind { Canonical, SchrodingerWeighted, NlsNonlocal, Sum };

  static PoissonStructure canonical(double hbar);
  static PoissonStructure schrodinger_weighted(SchrodingerOperator op);
  /// The nonlocal NLS structure. Its matrix entries contain the fields of the
  /// base state, which is snapshotted at construction.
  static PoissonStructure nls_nonlocal(double hbar, double mass, double alpha, PhasePair base);
  /// Same, with alpha = b sqrt(2m)/hbar derived from the coupling b.
  static PoissonStructure nls_from_coupling(double hbar, double mass, double b, PhasePair base);
  /// Pointwise sum of two structures (tangent maps added); used for
  /// compatibility checks of bracket pairs.
  static PoissonStructure sum(PoissonStructure lhs, PoissonStructure rhs);

  Kind kind() const { return kind_; }
  std::string name() const;
  double hbar() const { return hbar_; }
  double mass() const { return mass_; }
  double alpha() const { return alpha_; }
  const SchrodingerOperator& op() const;
  const PhasePair& base() const;

  /// Maps a functional gradient to the tangent field of its flow.
  PhasePair apply(const PhasePair& covector) const;

  /// Same structure with the base state replaced (identity for the
  /// state-independent variants). Needed when a bracket is evaluated as a
  /// functional of the state.
  PoissonStructure rebased(const PhasePair& state) const;

 private:
  PoissonStructure() = default;
  Kind kind_ = Kind::Canonical;
  double hbar_ = 1.0;
  double mass_ = 1.0;
  double alpha_ = 0.0;
  std::shared_ptr<const SchrodingerOperator> op_;
  std::shared_ptr<const PhasePair> base_;
  std::vector<PoissonStructure> parts_;
};

/// Recursion operator mapping the gradient of one conserved functional to the
/// gradient of the next one up the tower.
class RecursionOperator {
 public:
  enum class Kind { LinearDiag, Nls };

  /// diag(H, H); state-independent, hence torsion-free by construction.
  static RecursionOperator linear_diag(SchrodingerOperator op);
  /// The nonlocal NLS recursion operator; entries contain the base state.
  static RecursionOperator nls(double hbar, double mass, double alpha, PhasePair base);
  static RecursionOperator nls_from_coupling(double hbar, double mass, double b, PhasePair base);

  Kind kind() const { return kind_; }
  PhasePair apply(const PhasePair& covector) const;

 private:
  RecursionOperator() = default;
  Kind kind_ = Kind::LinearDiag;
  double hbar_ = 1.0;
  double mass_ = 1.0;
  double alpha_ = 0.0;
  std::shared_ptr<const SchrodingerOperator> op_;
  std::shared_ptr<const PhasePair> base_;
};

/// <gradF, P gradG> under the quadrature inner product.
double poisson_bracket(const PoissonStructure& P, const PhasePair& grad_f,
                       const PhasePair& grad_g);

struct JacobiReport {
  double residual = 0.0;              // |{F,{G,H}} + {G,{H,F}} + {H,{F,G}}|
  double scale = 1.0;                 // max(1, sum of |cyclic terms|)
  std::array<double, 3> terms{};      // the three cyclic addends
};

/// Cyclic Jacobi sum at u, with inner brackets realized as functionals of the
/// state (the structure is rebased at every probe point) and gradients taken
/// by nested central differences.
JacobiReport jacobi_report(const PoissonStructure& P, const FunctionalFn& F,
                           const FunctionalFn& G, const FunctionalFn& H, const PhasePair& u,
                           double eps_outer = 1e-4, double eps_inner = 1e-5);

double jacobi_residual(const PoissonStructure& P, const FunctionalFn& F, const FunctionalFn& G,
                       const FunctionalFn& H, const PhasePair& u, double eps_outer = 1e-4,
                       double eps_inner = 1e-5);

/// Declarative record of the symplectic forms. omega1 is the canonical
/// hbar int dp ^ dq and can be paired explicitly; the weighted forms are kept
/// symbolic (H^{-1} is never formed) and all their checks are phrased through
/// the Poisson structures.
struct SymplecticFormSpec {
  enum class Variant { Omega1, Omega0, Omega2 };
  Variant variant = Variant::Omega1;
  double hbar = 1.0;

  std::string describe() const;
  /// hbar int (v_p w_q - w_p v_q); only defined for Omega1.
  double pair(const PhasePair& v, const PhasePair& w) const;
};

}  // namespace biham
