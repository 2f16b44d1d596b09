#include "biham/poisson.hpp"

#include <cmath>
#include <stdexcept>

namespace biham {
namespace {

// w = p a - q b, the integrand common to every nonlocal entry.
RealField nonlocal_integrand(const PhasePair& base, const PhasePair& cov) {
  RealField w = hadamard(base.p, cov.q);
  const RealField qb = hadamard(base.q, cov.p);
  for (int i = 0; i < w.size(); ++i) w[i] -= qb[i];
  return w;
}

}  // namespace

PoissonStructure PoissonStructure::canonical(double hbar) {
  if (!(hbar > 0.0)) throw std::invalid_argument("PoissonStructure: hbar must be positive");
  PoissonStructure s;
  s.kind_ = Kind::Canonical;
  s.hbar_ = hbar;
  return s;
}

PoissonStructure PoissonStructure::schrodinger_weighted(SchrodingerOperator op) {
  PoissonStructure s;
  s.kind_ = Kind::SchrodingerWeighted;
  s.hbar_ = op.hbar();
  s.mass_ = op.mass();
  s.op_ = std::make_shared<SchrodingerOperator>(std::move(op));
  return s;
}

PoissonStructure PoissonStructure::nls_nonlocal(double hbar, double mass, double alpha,
                                                PhasePair base) {
  if (!(hbar > 0.0) || !(mass > 0.0))
    throw std::invalid_argument("PoissonStructure: hbar and mass must be positive");
  PoissonStructure s;
  s.kind_ = Kind::NlsNonlocal;
  s.hbar_ = hbar;
  s.mass_ = mass;
  s.alpha_ = alpha;
  s.base_ = std::make_shared<PhasePair>(std::move(base));
  return s;
}

PoissonStructure PoissonStructure::nls_from_coupling(double hbar, double mass, double b,
                                                     PhasePair base) {
  return nls_nonlocal(hbar, mass, b * std::sqrt(2.0 * mass) / hbar, std::move(base));
}

PoissonStructure PoissonStructure::sum(PoissonStructure lhs, PoissonStructure rhs) {
  PoissonStructure s;
  s.kind_ = Kind::Sum;
  s.hbar_ = lhs.hbar_;
  s.parts_.push_back(std::move(lhs));
  s.parts_.push_back(std::move(rhs));
  return s;
}

std::string PoissonStructure::name() const {
  switch (kind_) {
    case Kind::Canonical: return "canonical";
    case Kind::SchrodingerWeighted: return "schrodinger-weighted";
    case Kind::NlsNonlocal: return "nls-nonlocal";
    case Kind::Sum: return parts_[0].name() + "+" + parts_[1].name();
  }
  return "?";
}

const SchrodingerOperator& PoissonStructure::op() const {
  if (!op_) throw std::logic_error("PoissonStructure: no Schrodinger operator in this variant");
  return *op_;
}

const PhasePair& PoissonStructure::base() const {
  if (!base_) throw std::logic_error("PoissonStructure: no base state in this variant");
  return *base_;
}

PhasePair PoissonStructure::apply(const PhasePair& cov) const {
  switch (kind_) {
    case Kind::Canonical: {
      const double inv = 1.0 / hbar_;
      return PhasePair(inv * cov.p, -1.0 * inv * cov.q);
    }
    case Kind::SchrodingerWeighted: {
      const double inv = 1.0 / hbar_;
      return PhasePair(inv * op_->apply(cov.p), -1.0 * inv * op_->apply(cov.q));
    }
    case Kind::NlsNonlocal: {
      require_same_grid(cov.grid(), base_->grid(), "PoissonStructure::apply");
      const double beta = hbar_ / std::sqrt(2.0 * mass_);
      const RealField ax = derivative(cov.q, 1);
      const RealField bx = derivative(cov.p, 1);
      RealField qdot = -beta * ax;
      RealField pdot = -beta * bx;
      if (alpha_ != 0.0) {
        const RealField dw = dminus1(nonlocal_integrand(*base_, cov));
        for (int i = 0; i < qdot.size(); ++i) {
          qdot[i] += 2.0 * alpha_ * base_->p[i] * dw[i];
          pdot[i] -= 2.0 * alpha_ * base_->q[i] * dw[i];
        }
      }
      const double inv = 1.0 / hbar_;
      return PhasePair(inv * qdot, inv * pdot);
    }
    case Kind::Sum: {
      PhasePair t = parts_[0].apply(cov);
      return t + parts_[1].apply(cov);
    }
  }
  throw std::logic_error("PoissonStructure::apply: unreachable");
}

PoissonStructure PoissonStructure::rebased(const PhasePair& state) const {
  switch (kind_) {
    case Kind::Canonical:
    case Kind::SchrodingerWeighted:
      return *this;
    case Kind::NlsNonlocal:
      return nls_nonlocal(hbar_, mass_, alpha_, state);
    case Kind::Sum:
      return sum(parts_[0].rebased(state), parts_[1].rebased(state));
  }
  throw std::logic_error("PoissonStructure::rebased: unreachable");
}

RecursionOperator RecursionOperator::linear_diag(SchrodingerOperator op) {
  RecursionOperator t;
  t.kind_ = Kind::LinearDiag;
  t.hbar_ = op.hbar();
  t.mass_ = op.mass();
  t.op_ = std::make_shared<SchrodingerOperator>(std::move(op));
  return t;
}

RecursionOperator RecursionOperator::nls(double hbar, double mass, double alpha, PhasePair base) {
  if (!(hbar > 0.0) || !(mass > 0.0))
    throw std::invalid_argument("RecursionOperator: hbar and mass must be positive");
  RecursionOperator t;
  t.kind_ = Kind::Nls;
  t.hbar_ = hbar;
  t.mass_ = mass;
  t.alpha_ = alpha;
  t.base_ = std::make_shared<PhasePair>(std::move(base));
  return t;
}

RecursionOperator RecursionOperator::nls_from_coupling(double hbar, double mass, double b,
                                                       PhasePair base) {
  return nls(hbar, mass, b * std::sqrt(2.0 * mass) / hbar, std::move(base));
}

PhasePair RecursionOperator::apply(const PhasePair& cov) const {
  if (kind_ == Kind::LinearDiag)
    return PhasePair(op_->apply(cov.q), op_->apply(cov.p));

  require_same_grid(cov.grid(), base_->grid(), "RecursionOperator::apply");
  const double beta = hbar_ / std::sqrt(2.0 * mass_);
  const RealField ax = derivative(cov.q, 1);
  const RealField bx = derivative(cov.p, 1);
  RealField row_q = beta * bx;
  RealField row_p = -beta * ax;
  if (alpha_ != 0.0) {
    const RealField dw = dminus1(nonlocal_integrand(*base_, cov));
    for (int i = 0; i < row_q.size(); ++i) {
      row_q[i] += 2.0 * alpha_ * base_->q[i] * dw[i];
      row_p[i] += 2.0 * alpha_ * base_->p[i] * dw[i];
    }
  }
  return PhasePair(std::move(row_q), std::move(row_p));
}

double poisson_bracket(const PoissonStructure& P, const PhasePair& grad_f,
                       const PhasePair& grad_g) {
  require_same_grid(grad_f.grid(), grad_g.grid(), "poisson_bracket");
  return inner(grad_f, P.apply(grad_g));
}

JacobiReport jacobi_report(const PoissonStructure& P, const FunctionalFn& F,
                           const FunctionalFn& G, const FunctionalFn& H, const PhasePair& u,
                           double eps_outer, double eps_inner) {
  auto bracket_functional = [&](const FunctionalFn& X, const FunctionalFn& Y) {
    return [&, X, Y](const PhasePair& v) {
      const PoissonStructure Pv = P.rebased(v);
      return poisson_bracket(Pv, fd_gradient(X, v, eps_inner), fd_gradient(Y, v, eps_inner));
    };
  };
  auto term = [&](const FunctionalFn& X, const FunctionalFn& Y, const FunctionalFn& Z) {
    const PoissonStructure Pu = P.rebased(u);
    const FunctionalFn byz = bracket_functional(Y, Z);
    return poisson_bracket(Pu, fd_gradient(X, u, eps_inner), fd_gradient(byz, u, eps_outer));
  };

  JacobiReport rep;
  rep.terms[0] = term(F, G, H);
  rep.terms[1] = term(G, H, F);
  rep.terms[2] = term(H, F, G);
  rep.residual = std::abs(rep.terms[0] + rep.terms[1] + rep.terms[2]);
  rep.scale = std::max(1.0, std::abs(rep.terms[0]) + std::abs(rep.terms[1]) +
                                std::abs(rep.terms[2]));
  return rep;
}

double jacobi_residual(const PoissonStructure& P, const FunctionalFn& F, const FunctionalFn& G,
                       const FunctionalFn& H, const PhasePair& u, double eps_outer,
                       double eps_inner) {
  return jacobi_report(P, F, G, H, u, eps_outer, eps_inner).residual;
}

std::string SymplecticFormSpec::describe() const {
  switch (variant) {
    case Variant::Omega1: return "omega1 = hbar int dp ^ dq";
    case Variant::Omega0: return "omega0 = hbar int H^{-1} dp ^ dq (symbolic; checked via Lambda0)";
    case Variant::Omega2: return "omega2 = hbar int H_N^{-1} dp ^ dq (symbolic; checked via Lambda2)";
  }
  return "?";
}

double SymplecticFormSpec::pair(const PhasePair& v, const PhasePair& w) const {
  if (variant != Variant::Omega1)
    throw std::logic_error("SymplecticFormSpec::pair: only omega1 is paired explicitly");
  RealField integrand = hadamard(v.p, w.q);
  const RealField wq = hadamard(w.p, v.q);
  for (int i = 0; i < integrand.size(); ++i) integrand[i] -= wq[i];
  return hbar * integrate(integrand);
}

}  // namespace biham
