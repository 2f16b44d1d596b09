#include "biham/sym/diffpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace biham::sym {
namespace {

int compare_factor_vec(const std::vector<Factor>& a, const std::vector<Factor>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = compare(a[i], b[i]);
    if (c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

// Canonical term key: factor list, then i-power. The coefficient is not part
// of the key (equal keys merge).
int compare_term_key(const Term& a, const Term& b) {
  const int c = compare_factor_vec(a.factors, b.factors);
  if (c != 0) return c;
  if (a.ipow != b.ipow) return a.ipow < b.ipow ? -1 : 1;
  return 0;
}

void canonicalize_term(Term& t) {
  t.ipow = ((t.ipow % 4) + 4) % 4;
  if (t.ipow >= 2) {
    t.coeff = -t.coeff;
    t.ipow -= 2;
  }
  std::sort(t.factors.begin(), t.factors.end(),
            [](const Factor& x, const Factor& y) { return compare(x, y) < 0; });
}

int term_max_order(const Term& t) {
  int m = 0;
  for (const auto& f : t.factors)
    if (f.kind == Factor::Kind::Field) m = std::max(m, f.order);
  return m;
}

int term_degree(const Term& t) { return static_cast<int>(t.factors.size()); }

std::string factor_name(const Factor& f);

std::string field_name(Sym s, int order) {
  std::string base = (s == Sym::Pot) ? "U" : "psi";
  if (order > 0) {
    base += "_";
    if (order <= 4)
      base += std::string(order, 'x');
    else
      base += "x" + std::to_string(order);
  }
  if (s == Sym::PsiBar) return "conj(" + base + ")";
  return base;
}

std::string factor_name(const Factor& f) {
  if (f.kind == Factor::Kind::Field) return field_name(f.sym, f.order);
  return "Dinv(" + to_string(*f.inner) + ")";
}

std::string render_term_body(const Term& t, bool include_sign) {
  std::vector<std::string> parts;
  const Rational mag = t.coeff.abs();
  if (!mag.is_one() || (t.factors.empty() && t.ipow == 0)) parts.push_back(mag.str());
  if (t.ipow == 1) parts.push_back("i");
  for (std::size_t i = 0; i < t.factors.size();) {
    std::size_t j = i;
    while (j < t.factors.size() && t.factors[j] == t.factors[i]) ++j;
    const std::size_t rep = j - i;
    std::string name = factor_name(t.factors[i]);
    if (rep > 1) name += "^" + std::to_string(rep);
    parts.push_back(std::move(name));
    i = j;
  }
  if (parts.empty()) parts.push_back("1");
  std::string out = include_sign && t.coeff.negative() ? "-" : "";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += "*";
    out += parts[i];
  }
  return out;
}

// Display order: highest derivative first, then sparser terms, then canonical.
bool render_less(const Term& a, const Term& b) {
  const int oa = term_max_order(a), ob = term_max_order(b);
  if (oa != ob) return oa > ob;
  const int da = term_degree(a), db = term_degree(b);
  if (da != db) return da < db;
  return compare_term_key(a, b) < 0;
}

}  // namespace

Factor Factor::field(Sym s, int order) {
  if (order < 0) throw std::invalid_argument("Factor: negative derivative order");
  Factor f;
  f.kind = Kind::Field;
  f.sym = s;
  f.order = order;
  return f;
}

Factor Factor::nonlocal(DiffPoly inner) {
  Factor f;
  f.kind = Kind::Nonlocal;
  f.inner = std::make_shared<DiffPoly>(std::move(inner));
  return f;
}

int compare(const Factor& a, const Factor& b) {
  if (a.kind != b.kind) return a.kind == Factor::Kind::Field ? -1 : 1;
  if (a.kind == Factor::Kind::Field) {
    if (a.sym != b.sym) return static_cast<int>(a.sym) < static_cast<int>(b.sym) ? -1 : 1;
    if (a.order != b.order) return a.order < b.order ? -1 : 1;
    return 0;
  }
  return compare(*a.inner, *b.inner);
}

bool operator==(const Factor& a, const Factor& b) { return compare(a, b) == 0; }

DiffPoly::DiffPoly(std::vector<Term> terms) {
  for (auto& t : terms) canonicalize_term(t);
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return compare_term_key(a, b) < 0; });
  for (auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    if (!terms_.empty() && compare_term_key(terms_.back(), t) == 0) {
      terms_.back().coeff = terms_.back().coeff + t.coeff;
      if (terms_.back().coeff.is_zero()) terms_.pop_back();
    } else {
      terms_.push_back(std::move(t));
    }
  }
}

DiffPoly DiffPoly::constant(Rational c) {
  if (c.is_zero()) return zero();
  return DiffPoly({Term{c, 0, {}}});
}

DiffPoly DiffPoly::imaginary_unit() { return DiffPoly({Term{Rational(1), 1, {}}}); }

DiffPoly DiffPoly::field(Sym s, int order) {
  return DiffPoly({Term{Rational(1), 0, {Factor::field(s, order)}}});
}

DiffPoly DiffPoly::from_term(Term t) { return DiffPoly({std::move(t)}); }

bool DiffPoly::has_nonlocal() const {
  for (const auto& t : terms_)
    for (const auto& f : t.factors)
      if (f.kind == Factor::Kind::Nonlocal) return true;
  return false;
}

int DiffPoly::max_order() const {
  int m = 0;
  for (const auto& t : terms_) m = std::max(m, term_max_order(t));
  return m;
}

DiffPoly DiffPoly::operator+(const DiffPoly& o) const {
  std::vector<Term> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return DiffPoly(std::move(all));
}

DiffPoly DiffPoly::operator-(const DiffPoly& o) const { return *this + (-o); }

DiffPoly DiffPoly::operator-() const {
  std::vector<Term> all = terms_;
  for (auto& t : all) t.coeff = -t.coeff;
  return DiffPoly(std::move(all));
}

DiffPoly DiffPoly::operator*(const DiffPoly& o) const {
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Term t;
      t.coeff = a.coeff * b.coeff;
      t.ipow = a.ipow + b.ipow;
      t.factors = a.factors;
      t.factors.insert(t.factors.end(), b.factors.begin(), b.factors.end());
      prod.push_back(std::move(t));
    }
  return DiffPoly(std::move(prod));
}

DiffPoly DiffPoly::scaled(const Rational& c) const {
  std::vector<Term> all = terms_;
  for (auto& t : all) t.coeff = t.coeff * c;
  return DiffPoly(std::move(all));
}

DiffPoly DiffPoly::times_i(int k) const {
  std::vector<Term> all = terms_;
  for (auto& t : all) t.ipow += k;
  return DiffPoly(std::move(all));
}

bool DiffPoly::operator==(const DiffPoly& o) const { return compare(*this, o) == 0; }

int compare(const DiffPoly& a, const DiffPoly& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  const std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = compare_term_key(ta[i], tb[i]);
    if (c != 0) return c;
    if (ta[i].coeff != tb[i].coeff) {
      const Rational d = ta[i].coeff - tb[i].coeff;
      return d.negative() ? -1 : 1;
    }
  }
  if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  return 0;
}

DiffPoly differentiate(const DiffPoly& p) {
  DiffPoly out;
  for (const auto& t : p.terms()) {
    for (std::size_t k = 0; k < t.factors.size(); ++k) {
      const Factor& fk = t.factors[k];
      Term rest;
      rest.coeff = t.coeff;
      rest.ipow = t.ipow;
      for (std::size_t j = 0; j < t.factors.size(); ++j)
        if (j != k) rest.factors.push_back(t.factors[j]);
      if (fk.kind == Factor::Kind::Field) {
        rest.factors.push_back(Factor::field(fk.sym, fk.order + 1));
        out = out + DiffPoly::from_term(std::move(rest));
      } else {
        // d/dx Dinv(Q) = Q
        out = out + DiffPoly::from_term(std::move(rest)) * (*fk.inner);
      }
    }
  }
  return out;
}

DiffPoly conjugate(const DiffPoly& p) {
  std::vector<Term> all;
  all.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    Term c;
    c.coeff = t.coeff;
    c.ipow = (4 - t.ipow) % 4;
    for (const auto& f : t.factors) {
      if (f.kind == Factor::Kind::Field) {
        Sym s = f.sym;
        if (s == Sym::Psi) s = Sym::PsiBar;
        else if (s == Sym::PsiBar) s = Sym::Psi;
        c.factors.push_back(Factor::field(s, f.order));
      } else {
        c.factors.push_back(Factor::nonlocal(conjugate(*f.inner)));
      }
    }
    all.push_back(std::move(c));
  }
  return DiffPoly(std::move(all));
}

DiffPoly variational_derivative(const DiffPoly& p, Sym sym) {
  if (p.has_nonlocal())
    throw std::invalid_argument("variational_derivative: polynomial must be local");
  const int max_order = p.max_order();
  DiffPoly out;
  for (int j = 0; j <= max_order; ++j) {
    const Factor target = Factor::field(sym, j);
    std::vector<Term> partial;
    for (const auto& t : p.terms()) {
      int mult = 0;
      for (const auto& f : t.factors)
        if (f == target) ++mult;
      if (mult == 0) continue;
      Term d;
      d.coeff = t.coeff * Rational(mult);
      d.ipow = t.ipow;
      bool removed = false;
      for (const auto& f : t.factors) {
        if (!removed && f == target) {
          removed = true;
          continue;
        }
        d.factors.push_back(f);
      }
      partial.push_back(std::move(d));
    }
    if (partial.empty()) continue;
    DiffPoly dp(std::move(partial));
    for (int k = 0; k < j; ++k) dp = differentiate(dp);
    out = (j % 2 == 0) ? out + dp : out - dp;
  }
  return out;
}

std::optional<DiffPoly> integrate_exact(const DiffPoly& p) {
  if (p.has_nonlocal())
    throw std::invalid_argument("integrate_exact: polynomial must be local");
  if (p.is_zero()) return DiffPoly::zero();
  for (Sym s : {Sym::Psi, Sym::PsiBar, Sym::Pot})
    if (!variational_derivative(p, s).is_zero()) return std::nullopt;
  for (const auto& t : p.terms())
    if (t.factors.empty()) return std::nullopt;  // leftover constant

  DiffPoly remainder = p;
  DiffPoly result;
  long guard = 1000 + 50 * static_cast<long>(p.terms().size());
  while (!remainder.is_zero()) {
    if (--guard < 0) return std::nullopt;
    // Peel the term whose highest-order factor is maximal.
    const Term* pick = nullptr;
    int pick_order = -1;
    for (const auto& t : remainder.terms()) {
      const int o = term_max_order(t);
      if (o > pick_order) {
        pick_order = o;
        pick = &t;
      }
    }
    if (pick_order < 1) return std::nullopt;

    // Lower the greatest factor of maximal order in the picked term.
    std::vector<Factor> cand = pick->factors;
    int idx = -1;
    for (int i = 0; i < static_cast<int>(cand.size()); ++i)
      if (cand[i].kind == Factor::Kind::Field && cand[i].order == pick_order) idx = i;
    cand[idx] = Factor::field(cand[idx].sym, cand[idx].order - 1);
    int mult = 0;
    for (const auto& f : cand)
      if (f == cand[idx]) ++mult;
    Term t;
    t.coeff = pick->coeff / Rational(mult);
    t.ipow = pick->ipow;
    t.factors = std::move(cand);
    const DiffPoly piece = DiffPoly::from_term(std::move(t));
    result = result + piece;
    remainder = remainder - differentiate(piece);
  }
  return result;
}

std::string to_string(const DiffPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<Term> terms = p.terms();
  std::sort(terms.begin(), terms.end(), render_less);

  bool common_prefix = terms.size() >= 2;
  const bool neg = terms.front().coeff.negative();
  const int ipow = terms.front().ipow;
  for (const auto& t : terms)
    if (t.coeff.negative() != neg || t.ipow != ipow) {
      common_prefix = false;
      break;
    }

  std::string out;
  if (common_prefix && (neg || ipow == 1)) {
    if (neg) out += "-";
    if (ipow == 1) out += "i*";
    out += "(";
    for (std::size_t i = 0; i < terms.size(); ++i) {
      Term t = terms[i];
      t.coeff = t.coeff.abs();
      t.ipow = 0;
      if (i > 0) out += " + ";
      out += render_term_body(t, false);
    }
    out += ")";
    return out;
  }

  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0) {
      out += render_term_body(terms[i], true);
    } else {
      out += terms[i].coeff.negative() ? " - " : " + ";
      out += render_term_body(terms[i], false);
    }
  }
  return out;
}

namespace {

Factor parse_field_token(const std::string& tok) {
  std::string body = tok;
  bool conj = false;
  if (body.rfind("conj(", 0) == 0 && body.back() == ')') {
    conj = true;
    body = body.substr(5, body.size() - 6);
  }
  Sym sym;
  std::string base;
  if (body.rfind("psi", 0) == 0) {
    sym = conj ? Sym::PsiBar : Sym::Psi;
    base = body.substr(3);
  } else if (body.rfind("U", 0) == 0) {
    if (conj) throw std::invalid_argument("parse: conj(U) is not a symbol");
    sym = Sym::Pot;
    base = body.substr(1);
  } else {
    throw std::invalid_argument("parse: unknown symbol '" + tok + "'");
  }
  int order = 0;
  if (!base.empty()) {
    if (base[0] != '_') throw std::invalid_argument("parse: bad derivative suffix in '" + tok + "'");
    base = base.substr(1);
    if (base.empty()) throw std::invalid_argument("parse: bad derivative suffix in '" + tok + "'");
    if (std::all_of(base.begin(), base.end(), [](char c) { return c == 'x'; })) {
      order = static_cast<int>(base.size());
    } else if (base[0] == 'x') {
      order = std::stoi(base.substr(1));
    } else {
      throw std::invalid_argument("parse: bad derivative suffix in '" + tok + "'");
    }
  }
  return Factor::field(sym, order);
}

}  // namespace

DiffPoly parse_monomial(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("parse: empty monomial");

  Term t;
  t.coeff = Rational(1);
  if (s[0] == '-') {
    t.coeff = Rational(-1);
    s = s.substr(1);
  } else if (s[0] == '+') {
    s = s.substr(1);
  }

  std::vector<std::string> toks;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '*' && depth == 0) {
      toks.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  toks.push_back(cur);

  for (const auto& raw : toks) {
    if (raw.empty()) throw std::invalid_argument("parse: empty token in '" + text + "'");
    std::string tok = raw;
    int power = 1;
    const auto caret = tok.find('^');
    if (caret != std::string::npos && tok.find(')', caret) == std::string::npos) {
      power = std::stoi(tok.substr(caret + 1));
      tok = tok.substr(0, caret);
      if (power < 1) throw std::invalid_argument("parse: exponent must be >= 1");
    }
    if (tok == "i") {
      t.ipow += power;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
      const auto slash = tok.find('/');
      long long num = std::stoll(tok.substr(0, slash));
      long long den = (slash == std::string::npos) ? 1 : std::stoll(tok.substr(slash + 1));
      Rational r(num, den);
      for (int k = 0; k < power; ++k) t.coeff = t.coeff * r;
      continue;
    }
    const Factor f = parse_field_token(tok);
    for (int k = 0; k < power; ++k) t.factors.push_back(f);
  }
  return DiffPoly::from_term(std::move(t));
}

}  // namespace biham::sym
