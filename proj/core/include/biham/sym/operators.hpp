#pragma once

#include <string>
#include <vector>

#include "biham/sym/diffpoly.hpp"

namespace biham::sym {

/// The four recursion operators of the hierarchy diagram, in complex notation
/// with hbar = 2m = alpha = 1:
///
///   T    P -> -P_xx + U P
///   TG   P -> P_xx + psi_x Dinv(psi_x P)
///   TK   P -> P_xx + (2/3) psi P + (1/3) psi_x Dinv(P)
///   TN   P -> i (P_x + psi Dinv(psi conj(P) + conj(psi) P))
///
/// Every Dinv argument is first integrated exactly; when that fails a formal
/// Dinv factor remains and the result reports has_nonlocal().
class SymbolicOperator {
 public:
  enum class Kind { Tlin, TG, TK, TN };

  static SymbolicOperator tlin(bool with_potential = true);
  static SymbolicOperator tg();
  static SymbolicOperator tk();
  static SymbolicOperator tn(bool with_nonlocal = true);
  /// Accepts "T", "Tlin", "TG", "TK", "TN".
  static SymbolicOperator from_name(const std::string& name);

  Kind kind() const { return kind_; }
  std::string name() const;

  DiffPoly apply(const DiffPoly& p) const;

 private:
  SymbolicOperator() = default;
  Kind kind_ = Kind::TN;
  bool with_potential_ = true;  // Tlin
  bool with_nonlocal_ = true;   // TN (alpha = 0 drops the Dinv part)
};

/// Symbolic Dinv: resolves to the exact antiderivative when one exists,
/// otherwise wraps the argument in a formal nonlocal factor.
DiffPoly symbolic_dminus1(const DiffPoly& arg);

/// Iterates the operator from the seed, returning the depth successive flows.
std::vector<DiffPoly> generate_hierarchy(const SymbolicOperator& op, const DiffPoly& seed,
                                         int depth);

struct TnSquareReport {
  struct Case {
    std::string input;
    bool equal_without_potential = false;
    bool equal_with_potential = false;
  };
  bool identity_holds = false;          // TN^2 == T at U = 0, alpha = 0, all basis elements
  bool refuted_with_potential = false;  // inequality observed once U is retained
  std::vector<Case> cases;
  std::string summary;
};

/// Verifies T = TN^2 on the basis {psi, psi_x, i psi, psi^2 conj(psi)} with
/// vanishing potential and alpha = 0, and that the identity fails with U kept.
TnSquareReport check_T_equals_TN_squared();

}  // namespace biham::sym
