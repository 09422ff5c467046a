#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "fibercone/groebner.hpp"
#include "fibercone/poly_parse.hpp"
#include "fibercone/polynomial.hpp"

namespace fibercone {

/// Krull dimension of P/(monomial ideal): the maximum cardinality of a
/// variable subset S such that no generator is supported entirely inside S.
inline int monomial_ideal_dimension(const std::vector<Monomial>& lts,
                                    std::size_t arity) {
  for (const auto& m : lts)
    if (m.is_one()) throw HypothesisError("dimension of improper ideal");
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << arity); ++mask) {
    bool independent = true;
    for (const auto& m : lts) {
      bool inside = true;
      for (std::size_t i = 0; i < arity && inside; ++i)
        if (m.exp(i) > 0 && !(mask >> i & 1)) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, __builtin_popcountll(mask));
  }
  return best;
}

/// Ambient ring R = k[x_1..x_n] / (relations): variable names, coefficient
/// field, and an optional homogeneous regular sequence of relations. The
/// Krull dimension d = n - #relations is verified at construction, which is
/// exactly the regular-sequence check for homogeneous relations.
template <Field F>
class RingContext {
 public:
  RingContext(std::vector<std::string> vars, typename F::Spec spec,
              std::vector<Polynomial<F>> relations = {},
              BuchbergerLimits limits = {})
      : vars_(std::move(vars)),
        spec_(std::move(spec)),
        relations_(std::move(relations)),
        limits_(limits) {
    F::validate(spec_);
    if (vars_.empty()) throw HypothesisError("ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars_)
      if (!seen.insert(v).second)
        throw HypothesisError("duplicate variable name " + v);
    for (const auto& r : relations_) {
      if (r.arity() != vars_.size())
        throw HypothesisError("relation arity mismatch");
      if (r.is_zero() || r.is_constant())
        throw HypothesisError("relation must be a nonconstant polynomial");
      if (!r.is_homogeneous())
        throw HypothesisError("relation is not homogeneous");
    }
    dim_ = static_cast<int>(vars_.size()) -
           static_cast<int>(relations_.size());
    if (dim_ <= 0)
      throw HypothesisError("ring dimension must be positive");
    if (!relations_.empty()) {
      auto gb = reduce_basis(buchberger<F>(relations_,
                                           MonomialOrder::degrevlex(),
                                           limits_));
      std::vector<Monomial> lts;
      for (const auto& g : gb.polys) lts.push_back(g.leading_monomial());
      if (monomial_ideal_dimension(lts, vars_.size()) != dim_)
        throw HypothesisError(
            "relations do not form a regular sequence (dimension check "
            "failed)");
    }
  }

  std::size_t arity() const { return vars_.size(); }
  int dim() const { return dim_; }
  const std::vector<std::string>& vars() const { return vars_; }
  const typename F::Spec& spec() const { return spec_; }
  const std::vector<Polynomial<F>>& relations() const { return relations_; }
  const BuchbergerLimits& limits() const { return limits_; }

  F sc(long long n) const { return F::from_long(n, spec_); }
  F one() const { return F::one(spec_); }

  Polynomial<F> zero_poly() const {
    return Polynomial<F>(arity(), MonomialOrder::degrevlex());
  }

  Polynomial<F> var_poly(std::size_t i) const {
    std::vector<std::uint32_t> e(arity(), 0);
    e[i] = 1;
    return Polynomial<F>::monomial(arity(), MonomialOrder::degrevlex(),
                                   Monomial(std::move(e)), one());
  }

  /// Parse a polynomial in this ring's variables.
  Polynomial<F> poly(const std::string& text) const {
    return parse_polynomial<F>(text, vars_, spec_);
  }

  std::string poly_string(const Polynomial<F>& p) const {
    return p.to_string(vars_);
  }

  bool operator==(const RingContext& o) const {
    return vars_ == o.vars_ && spec_ == o.spec_ &&
           relations_ == o.relations_;
  }

 private:
  std::vector<std::string> vars_;
  typename F::Spec spec_;
  std::vector<Polynomial<F>> relations_;
  BuchbergerLimits limits_;
  int dim_;
};

template <Field F>
using RingPtr = std::shared_ptr<const RingContext<F>>;

template <Field F>
RingPtr<F> make_ring(std::vector<std::string> vars, typename F::Spec spec,
                     std::vector<Polynomial<F>> relations = {},
                     BuchbergerLimits limits = {}) {
  return std::make_shared<const RingContext<F>>(
      std::move(vars), std::move(spec), std::move(relations), limits);
}

}  // namespace fibercone
