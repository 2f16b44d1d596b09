#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "biham/sym/rational.hpp"

namespace biham::sym {

class DiffPoly;

/// Field symbols of the differential-polynomial ring: the wave function, its
/// conjugate, and the external potential.
enum class Sym { Psi, PsiBar, Pot };

/// A single multiplicative factor: either a field derivative psi^{(j)},
/// conj(psi)^{(j)}, U^{(j)}, or a formal antiderivative Dinv(inner).
struct Factor {
  enum class Kind { Field, Nonlocal };
  Kind kind = Kind::Field;
  Sym sym = Sym::Psi;
  int order = 0;
  std::shared_ptr<const DiffPoly> inner;  // Nonlocal only, canonical

  static Factor field(Sym s, int order = 0);
  static Factor nonlocal(DiffPoly inner);
};

int compare(const Factor& a, const Factor& b);
bool operator==(const Factor& a, const Factor& b);

/// coeff * i^ipow * product(factors); ipow canonicalized to {0, 1} with the
/// sign of i^2 = -1 folded into the coefficient.
struct Term {
  Rational coeff;
  int ipow = 0;
  std::vector<Factor> factors;  // sorted
};

/// Exact differential polynomial in canonical form: factors sorted within
/// each term, terms sorted and merged, no zero coefficients. Equality of
/// canonical forms is structural equality.
class DiffPoly {
 public:
  DiffPoly() = default;
  explicit DiffPoly(std::vector<Term> terms);

  static DiffPoly zero() { return DiffPoly(); }
  static DiffPoly constant(Rational c);
  static DiffPoly imaginary_unit();
  static DiffPoly field(Sym s, int order = 0);
  static DiffPoly from_term(Term t);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_nonlocal() const;
  int max_order() const;

  DiffPoly operator+(const DiffPoly& o) const;
  DiffPoly operator-(const DiffPoly& o) const;
  DiffPoly operator-() const;
  DiffPoly operator*(const DiffPoly& o) const;
  DiffPoly scaled(const Rational& c) const;
  /// Multiplication by i^k.
  DiffPoly times_i(int k = 1) const;

  bool operator==(const DiffPoly& o) const;

 private:
  std::vector<Term> terms_;
};

int compare(const DiffPoly& a, const DiffPoly& b);

/// Total x-derivative (Leibniz rule; the derivative of Dinv(Q) is Q).
DiffPoly differentiate(const DiffPoly& p);

/// Complex conjugation: psi <-> conj(psi), i -> -i, recursing into Dinv.
DiffPoly conjugate(const DiffPoly& p);

/// Variational (Euler) derivative with respect to one field symbol:
/// sum_j (-d/dx)^j dP/d(sym^{(j)}). Vanishes exactly on total derivatives.
DiffPoly variational_derivative(const DiffPoly& p, Sym sym);

/// Exact antiderivative: returns Q with differentiate(Q) == p when p is a
/// total x-derivative, empty otherwise. Integration constants are dropped
/// (fields decay at infinity). p must contain no Dinv factors.
std::optional<DiffPoly> integrate_exact(const DiffPoly& p);

/// Deterministic plain-text rendering, e.g. "-(psi_xxx + 3*psi*conj(psi)*psi_x)".
std::string to_string(const DiffPoly& p);

/// Parses a signed monomial like "-i*psi", "psi_x", "3/2*psi^2*conj(psi)".
DiffPoly parse_monomial(const std::string& text);

}  // namespace biham::sym
