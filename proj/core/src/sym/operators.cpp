#include "biham/sym/operators.hpp"

#include <stdexcept>

namespace biham::sym {
namespace {

DiffPoly d2(const DiffPoly& p) { return differentiate(differentiate(p)); }

}  // namespace

SymbolicOperator SymbolicOperator::tlin(bool with_potential) {
  SymbolicOperator op;
  op.kind_ = Kind::Tlin;
  op.with_potential_ = with_potential;
  return op;
}

SymbolicOperator SymbolicOperator::tg() {
  SymbolicOperator op;
  op.kind_ = Kind::TG;
  return op;
}

SymbolicOperator SymbolicOperator::tk() {
  SymbolicOperator op;
  op.kind_ = Kind::TK;
  return op;
}

SymbolicOperator SymbolicOperator::tn(bool with_nonlocal) {
  SymbolicOperator op;
  op.kind_ = Kind::TN;
  op.with_nonlocal_ = with_nonlocal;
  return op;
}

SymbolicOperator SymbolicOperator::from_name(const std::string& name) {
  if (name == "T" || name == "Tlin") return tlin();
  if (name == "TG") return tg();
  if (name == "TK") return tk();
  if (name == "TN") return tn();
  throw std::invalid_argument("SymbolicOperator: unknown operator '" + name + "'");
}

std::string SymbolicOperator::name() const {
  switch (kind_) {
    case Kind::Tlin: return "T";
    case Kind::TG: return "TG";
    case Kind::TK: return "TK";
    case Kind::TN: return "TN";
  }
  return "?";
}

DiffPoly symbolic_dminus1(const DiffPoly& arg) {
  if (arg.is_zero()) return DiffPoly::zero();
  if (!arg.has_nonlocal()) {
    if (auto local = integrate_exact(arg)) return *local;
  }
  return DiffPoly::from_term(Term{Rational(1), 0, {Factor::nonlocal(arg)}});
}

DiffPoly SymbolicOperator::apply(const DiffPoly& p) const {
  const DiffPoly psi = DiffPoly::field(Sym::Psi);
  const DiffPoly psi_x = DiffPoly::field(Sym::Psi, 1);
  switch (kind_) {
    case Kind::Tlin: {
      DiffPoly out = -d2(p);
      if (with_potential_) out = out + DiffPoly::field(Sym::Pot) * p;
      return out;
    }
    case Kind::TG:
      return d2(p) + psi_x * symbolic_dminus1(psi_x * p);
    case Kind::TK:
      return d2(p) + psi.scaled(Rational(2, 3)) * p +
             psi_x.scaled(Rational(1, 3)) * symbolic_dminus1(p);
    case Kind::TN: {
      DiffPoly out = differentiate(p);
      if (with_nonlocal_) {
        const DiffPoly arg = psi * conjugate(p) + conjugate(psi) * p;
        out = out + psi * symbolic_dminus1(arg);
      }
      return out.times_i();
    }
  }
  throw std::logic_error("SymbolicOperator::apply: unreachable");
}

std::vector<DiffPoly> generate_hierarchy(const SymbolicOperator& op, const DiffPoly& seed,
                                         int depth) {
  if (depth < 1) throw std::invalid_argument("generate_hierarchy: depth must be >= 1");
  std::vector<DiffPoly> flows;
  flows.reserve(depth);
  DiffPoly cur = seed;
  for (int k = 0; k < depth; ++k) {
    cur = op.apply(cur);
    flows.push_back(cur);
  }
  return flows;
}

TnSquareReport check_T_equals_TN_squared() {
  const SymbolicOperator tn0 = SymbolicOperator::tn(false);
  const SymbolicOperator t_free = SymbolicOperator::tlin(false);
  const SymbolicOperator t_full = SymbolicOperator::tlin(true);

  const std::vector<DiffPoly> basis = {
      DiffPoly::field(Sym::Psi),
      DiffPoly::field(Sym::Psi, 1),
      DiffPoly::field(Sym::Psi).times_i(),
      DiffPoly::field(Sym::Psi) * DiffPoly::field(Sym::Psi) * DiffPoly::field(Sym::PsiBar),
  };

  TnSquareReport rep;
  rep.identity_holds = true;
  rep.refuted_with_potential = false;
  for (const auto& b : basis) {
    const DiffPoly twice = tn0.apply(tn0.apply(b));
    TnSquareReport::Case c;
    c.input = to_string(b);
    c.equal_without_potential = (twice == t_free.apply(b));
    c.equal_with_potential = (twice == t_full.apply(b));
    rep.identity_holds = rep.identity_holds && c.equal_without_potential;
    rep.refuted_with_potential = rep.refuted_with_potential || !c.equal_with_potential;
    rep.summary += "TN^2(" + c.input + ") " +
                   (c.equal_without_potential ? std::string("== T (U=0)") : std::string("!= T (U=0)")) +
                   ", " + (c.equal_with_potential ? "== T (U kept)" : "!= T (U kept)") + "\n";
    rep.cases.push_back(std::move(c));
  }
  return rep;
}

}  // namespace biham::sym
