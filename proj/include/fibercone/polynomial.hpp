#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "fibercone/field.hpp"
#include "fibercone/monomial.hpp"
#include "fibercone/monomial_order.hpp"

namespace fibercone {

template <Field F>
struct Term {
  Monomial mono;
  F coeff;
  bool operator==(const Term&) const = default;
};

/// Canonical sparse polynomial: term list strictly descending in the carried
/// monomial order, no zero coefficients. Equal polynomials under the same
/// order have identical term lists; the zero polynomial is the empty list.
template <Field F>
class Polynomial {
 public:
  Polynomial(std::size_t arity, MonomialOrder ord)
      : arity_(arity), ord_(ord) {}

  /// Canonicalizes: sorts descending, merges equal monomials, drops zeros.
  static Polynomial from_terms(std::size_t arity, MonomialOrder ord,
                               std::vector<Term<F>> terms) {
    Polynomial p(arity, ord);
    std::stable_sort(terms.begin(), terms.end(),
                     [&](const Term<F>& a, const Term<F>& b) {
                       return ord.greater(a.mono, b.mono);
                     });
    for (auto& t : terms) {
      if (t.mono.arity() != arity) throw Error("term arity mismatch");
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff = p.terms_.back().coeff + t.coeff;
        if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
      } else if (!t.coeff.is_zero()) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  static Polynomial monomial(std::size_t arity, MonomialOrder ord, Monomial m,
                             F c) {
    Polynomial p(arity, ord);
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  static Polynomial constant(std::size_t arity, MonomialOrder ord, F c) {
    return monomial(arity, ord, Monomial::one(arity), std::move(c));
  }

  std::size_t arity() const { return arity_; }
  const MonomialOrder& order() const { return ord_; }
  const std::vector<Term<F>>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const Term<F>& leading_term() const {
    if (is_zero()) throw Error("leading term of zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const F& leading_coeff() const { return leading_term().coeff; }

  /// Max total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, int(t.mono.degree()));
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  /// Same polynomial re-sorted under a different order.
  Polynomial with_order(MonomialOrder ord) const {
    if (ord == ord_) return *this;
    return from_terms(arity_, ord, terms_);
  }

  Polynomial operator-() const {
    Polynomial r(arity_, ord_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
    return r;
  }

  Polynomial operator+(const Polynomial& o) const {
    return merged(o, /*negate=*/false);
  }
  Polynomial operator-(const Polynomial& o) const {
    return merged(o, /*negate=*/true);
  }

  Polynomial scaled(const F& c) const {
    if (c.is_zero()) return Polynomial(arity_, ord_);
    Polynomial r(arity_, ord_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
  }

  /// Multiplication by a single term keeps the list sorted (the order is
  /// multiplicative), so no re-sort is needed.
  Polynomial times_term(const Monomial& m, const F& c) const {
    if (c.is_zero()) return Polynomial(arity_, ord_);
    Polynomial r(arity_, ord_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    check_compat(o);
    std::vector<Term<F>> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : o.terms_)
        acc.push_back({a.mono * b.mono, a.coeff * b.coeff});
    return from_terms(arity_, ord_, std::move(acc));
  }

  /// this - c * (u * g); the workhorse of division loops.
  Polynomial minus_scaled(const F& c, const Monomial& u,
                          const Polynomial& g) const {
    check_compat(g);
    Polynomial r(arity_, ord_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
      Monomial gm = g.terms_[j].mono * u;
      int cmp = ord_.compare(terms_[i].mono, gm);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        F v = -(c * g.terms_[j].coeff);
        if (!v.is_zero()) r.terms_.push_back({std::move(gm), std::move(v)});
        ++j;
      } else {
        F v = terms_[i].coeff - c * g.terms_[j].coeff;
        if (!v.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(v)});
        ++i;
        ++j;
      }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < g.terms_.size(); ++j) {
      F v = -(c * g.terms_[j].coeff);
      if (!v.is_zero()) r.terms_.push_back({g.terms_[j].mono * u, std::move(v)});
    }
    return r;
  }

  /// Polynomial with the leading term removed.
  Polynomial tail() const {
    if (is_zero()) throw Error("tail of zero polynomial");
    Polynomial r(arity_, ord_);
    r.terms_.assign(terms_.begin() + 1, terms_.end());
    return r;
  }

  /// Leading coefficient scaled to 1.
  Polynomial monic() const {
    if (is_zero()) return *this;
    if (leading_coeff().is_one()) return *this;
    return scaled(leading_coeff().inv());
  }

  bool operator==(const Polynomial& o) const {
    if (arity_ != o.arity_) return false;
    if (ord_ == o.ord_) return terms_ == o.terms_;
    return terms_ == o.with_order(ord_).terms_;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    std::string s;
    for (const auto& t : terms_) {
      std::string c = t.coeff.to_string();
      bool neg = !c.empty() && c[0] == '-';
      if (neg) c = c.substr(1);
      s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      if (t.mono.is_one()) {
        s += c;
      } else if (c == "1") {
        s += t.mono.to_string(names);
      } else {
        s += c + "*" + t.mono.to_string(names);
      }
    }
    return s;
  }

 private:
  Polynomial merged(const Polynomial& o, bool negate) const {
    check_compat(o);
    Polynomial r(arity_, ord_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
      int cmp = ord_.compare(terms_[i].mono, o.terms_[j].mono);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        const auto& t = o.terms_[j++];
        r.terms_.push_back({t.mono, negate ? -t.coeff : t.coeff});
      } else {
        F v = negate ? terms_[i].coeff - o.terms_[j].coeff
                     : terms_[i].coeff + o.terms_[j].coeff;
        if (!v.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(v)});
        ++i;
        ++j;
      }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) {
      const auto& t = o.terms_[j];
      r.terms_.push_back({t.mono, negate ? -t.coeff : t.coeff});
    }
    return r;
  }

  void check_compat(const Polynomial& o) const {
    if (arity_ != o.arity_) throw Error("polynomial arity mismatch");
    if (!(ord_ == o.ord_)) throw Error("polynomial order mismatch");
  }

  std::size_t arity_;
  MonomialOrder ord_;
  std::vector<Term<F>> terms_;
};

}  // namespace fibercone
