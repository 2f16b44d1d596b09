#include "biham/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace biham {

FunctionalSpec FunctionalSpec::Hn(int n, SchrodingerOperator op) {
  if (n < 0) throw std::invalid_argument("FunctionalSpec::Hn: n must be >= 0");
  FunctionalSpec f;
  f.kind_ = Kind::Hn;
  f.n_ = n;
  f.hbar_ = op.hbar();
  f.mass_ = op.mass();
  f.op_ = std::make_shared<SchrodingerOperator>(std::move(op));
  return f;
}

FunctionalSpec FunctionalSpec::Kminus1() {
  FunctionalSpec f;
  f.kind_ = Kind::Kminus1;
  return f;
}

FunctionalSpec FunctionalSpec::K0(double hbar, double mass) {
  if (!(hbar > 0.0) || !(mass > 0.0))
    throw std::invalid_argument("FunctionalSpec::K0: hbar and mass must be positive");
  FunctionalSpec f;
  f.kind_ = Kind::K0;
  f.hbar_ = hbar;
  f.mass_ = mass;
  return f;
}

FunctionalSpec FunctionalSpec::K1(double hbar, double mass, double b) {
  if (!(hbar > 0.0) || !(mass > 0.0))
    throw std::invalid_argument("FunctionalSpec::K1: hbar and mass must be positive");
  FunctionalSpec f;
  f.kind_ = Kind::K1;
  f.hbar_ = hbar;
  f.mass_ = mass;
  f.b_ = b;
  return f;
}

std::string FunctionalSpec::name() const {
  switch (kind_) {
    case Kind::Hn: return "H" + std::to_string(n_);
    case Kind::Kminus1: return "K-1";
    case Kind::K0: return "K0";
    case Kind::K1: return "K1";
  }
  return "?";
}

double FunctionalSpec::value(const PhasePair& u) const {
  switch (kind_) {
    case Kind::Hn: {
      require_same_grid(u.grid(), op_->grid(), "FunctionalSpec::value");
      return 0.5 * (inner(u.p, op_->apply_power(u.p, n_)) +
                    inner(u.q, op_->apply_power(u.q, n_)));
    }
    case Kind::Kminus1:
      return 0.5 * inner(u, u);
    case Kind::K0: {
      const double beta = hbar_ / std::sqrt(2.0 * mass_);
      return beta * inner(u.q, derivative(u.p, 1));
    }
    case Kind::K1: {
      const double kin = hbar_ * hbar_ / (2.0 * mass_);
      const RealField qx = derivative(u.q, 1);
      const RealField px = derivative(u.p, 1);
      double acc = 0.0;
      const Grid1D& g = u.grid();
      for (int i = 0; i < g.points(); ++i) {
        const double rho = u.q[i] * u.q[i] + u.p[i] * u.p[i];
        acc += g.weight(i) *
               (kin * (px[i] * px[i] + qx[i] * qx[i]) + 0.5 * b_ * rho * rho);
      }
      return 0.5 * acc;
    }
  }
  throw std::logic_error("FunctionalSpec::value: unreachable");
}

PhasePair FunctionalSpec::gradient(const PhasePair& u) const {
  switch (kind_) {
    case Kind::Hn: {
      require_same_grid(u.grid(), op_->grid(), "FunctionalSpec::gradient");
      return PhasePair(op_->apply_power(u.q, n_), op_->apply_power(u.p, n_));
    }
    case Kind::Kminus1:
      return u;
    case Kind::K0: {
      const double beta = hbar_ / std::sqrt(2.0 * mass_);
      return PhasePair(beta * derivative(u.p, 1), -beta * derivative(u.q, 1));
    }
    case Kind::K1: {
      const double kin = hbar_ * hbar_ / (2.0 * mass_);
      RealField gq = -kin * derivative(u.q, 2);
      RealField gp = -kin * derivative(u.p, 2);
      for (int i = 0; i < gq.size(); ++i) {
        const double rho = u.q[i] * u.q[i] + u.p[i] * u.p[i];
        gq[i] += b_ * rho * u.q[i];
        gp[i] += b_ * rho * u.p[i];
      }
      return PhasePair(std::move(gq), std::move(gp));
    }
  }
  throw std::logic_error("FunctionalSpec::gradient: unreachable");
}

FunctionalFn FunctionalSpec::evaluator() const {
  FunctionalSpec copy = *this;
  return [copy](const PhasePair& u) { return copy.value(u); };
}

std::vector<std::vector<double>> involution_matrix(const std::vector<FunctionalSpec>& specs,
                                                   const PoissonStructure& P, const PhasePair& u) {
  const int n = static_cast<int>(specs.size());
  std::vector<PhasePair> grads;
  grads.reserve(n);
  for (const auto& s : specs) grads.push_back(s.gradient(u));
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = poisson_bracket(P, grads[i], grads[j]);
  return m;
}

double involution_max_normalized(const std::vector<FunctionalSpec>& specs,
                                 const PoissonStructure& P, const PhasePair& u) {
  const int n = static_cast<int>(specs.size());
  std::vector<PhasePair> grads;
  std::vector<PhasePair> tangents;
  grads.reserve(n);
  tangents.reserve(n);
  for (const auto& s : specs) {
    grads.push_back(s.gradient(u));
    tangents.push_back(P.apply(grads.back()));
  }
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double entry = inner(grads[i], tangents[j]);
      const double scale = std::max(1.0, norm(grads[i]) * norm(tangents[j]));
      worst = std::max(worst, std::abs(entry) / scale);
    }
  return worst;
}

std::vector<double> linear_recursion_residuals(const PhasePair& u, const SchrodingerOperator& op,
                                               int n_max) {
  std::vector<double> res;
  res.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    const PhasePair gn = FunctionalSpec::Hn(n, op).gradient(u);
    const PhasePair gnext = FunctionalSpec::Hn(n + 1, op).gradient(u);
    const PhasePair lifted(op.apply(gn.q), op.apply(gn.p));
    res.push_back(norm(gnext - lifted) / std::max(norm(gnext), 1e-300));
  }
  return res;
}

NlsRecursionReport nls_recursion_residuals(const PhasePair& u, double hbar, double mass,
                                           double b) {
  const RecursionOperator T = RecursionOperator::nls_from_coupling(hbar, mass, b, u);
  const PhasePair x_m1 = T.apply(FunctionalSpec::Kminus1().gradient(u));
  const PhasePair y_m1 = FunctionalSpec::K0(hbar, mass).gradient(u);
  const PhasePair x_0 = T.apply(y_m1);
  const PhasePair y_0 = FunctionalSpec::K1(hbar, mass, b).gradient(u);

  const double num = inner(x_m1, y_m1) + inner(x_0, y_0);
  const double den = inner(x_m1, x_m1) + inner(x_0, x_0);
  NlsRecursionReport rep;
  rep.c = (den > 0.0) ? num / den : 1.0;
  rep.residuals.push_back(norm(rep.c * x_m1 - y_m1) / std::max(norm(y_m1), 1e-300));
  rep.residuals.push_back(norm(rep.c * x_0 - y_0) / std::max(norm(y_0), 1e-300));
  return rep;
}

}  // namespace biham
