#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "fibercone/ring.hpp"

namespace fibercone {

/// Homogeneous ideal of R: generator list plus a write-once cache of reduced
/// Groebner bases per monomial order, always computed with the ring's
/// relations adjoined. Value semantics; copies share the cache.
template <Field F>
class Ideal {
 public:
  Ideal(RingPtr<F> ctx, std::vector<Polynomial<F>> gens)
      : rep_(std::make_shared<Rep>()) {
    rep_->ctx = std::move(ctx);
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      if (g.arity() != rep_->ctx->arity())
        throw HypothesisError("generator arity mismatch");
      if (!g.is_homogeneous())
        throw HypothesisError("generator is not homogeneous: " +
                              rep_->ctx->poly_string(g));
      rep_->gens.push_back(g.with_order(MonomialOrder::degrevlex()));
    }
  }

  const RingPtr<F>& ctx() const { return rep_->ctx; }
  const std::vector<Polynomial<F>>& gens() const { return rep_->gens; }

  /// Reduced Groebner basis of (gens + relations) under `ord`; cached
  /// write-once per order and bitwise identical to a fresh computation.
  const GroebnerBasis<F>& basis(
      MonomialOrder ord = MonomialOrder::degrevlex()) const {
    {
      std::lock_guard<std::mutex> lock(rep_->mu);
      auto it = rep_->cache.find(ord);
      if (it != rep_->cache.end()) return *it->second;
    }
    std::vector<Polynomial<F>> input = rep_->gens;
    for (const auto& r : rep_->ctx->relations()) input.push_back(r);
    auto gb = std::make_shared<GroebnerBasis<F>>(
        reduce_basis(buchberger<F>(input, ord, rep_->ctx->limits())));
    std::lock_guard<std::mutex> lock(rep_->mu);
    auto [it, inserted] = rep_->cache.emplace(ord, std::move(gb));
    return *it->second;
  }

  bool is_zero_ideal() const { return basis().polys.empty(); }
  bool is_unit_ideal() const {
    const auto& b = basis().polys;
    return b.size() == 1 && b[0].is_constant();
  }

 private:
  struct Rep {
    RingPtr<F> ctx;
    std::vector<Polynomial<F>> gens;
    mutable std::mutex mu;
    mutable std::map<MonomialOrder,
                     std::shared_ptr<const GroebnerBasis<F>>> cache;
  };
  std::shared_ptr<Rep> rep_;
};

namespace detail {

template <Field F>
void check_same_ctx(const Ideal<F>& a, const Ideal<F>& b) {
  if (!(*a.ctx() == *b.ctx()))
    throw HypothesisError("ideals live in different rings");
}

}  // namespace detail

template <Field F>
Ideal<F> unit_ideal(const RingPtr<F>& ctx) {
  return Ideal<F>(ctx, {Polynomial<F>::constant(
                           ctx->arity(), MonomialOrder::degrevlex(),
                           ctx->one())});
}

template <Field F>
Ideal<F> maximal_ideal(const RingPtr<F>& ctx) {
  std::vector<Polynomial<F>> gens;
  for (std::size_t i = 0; i < ctx->arity(); ++i)
    gens.push_back(ctx->var_poly(i));
  return Ideal<F>(ctx, std::move(gens));
}

/// Generators replaced by the reduced basis; bounds generator blowup in
/// iterated products.
template <Field F>
Ideal<F> rebased(const Ideal<F>& a) {
  return Ideal<F>(a.ctx(), a.basis().polys);
}

template <Field F>
Ideal<F> sum(const Ideal<F>& a, const Ideal<F>& b) {
  detail::check_same_ctx(a, b);
  std::vector<Polynomial<F>> gens = a.gens();
  for (const auto& g : b.gens()) gens.push_back(g);
  return Ideal<F>(a.ctx(), std::move(gens));
}

template <Field F>
Ideal<F> product(const Ideal<F>& a, const Ideal<F>& b) {
  detail::check_same_ctx(a, b);
  const auto& ga = a.basis().polys;
  const auto& gb = b.basis().polys;
  std::vector<Polynomial<F>> gens;
  gens.reserve(ga.size() * gb.size());
  for (const auto& f : ga)
    for (const auto& g : gb) gens.push_back(f * g);
  return Ideal<F>(a.ctx(), std::move(gens));
}

template <Field F>
Ideal<F> power(const Ideal<F>& a, int n) {
  if (n < 0) throw HypothesisError("negative ideal power");
  Ideal<F> acc = unit_ideal(a.ctx());
  for (int i = 0; i < n; ++i) acc = product(acc, a);
  return acc;
}

template <Field F>
bool contains(const Ideal<F>& a, const Polynomial<F>& f) {
  return normal_form<F>(f, a.basis().polys, MonomialOrder::degrevlex())
      .is_zero();
}

template <Field F>
bool ideal_leq(const Ideal<F>& a, const Ideal<F>& b) {
  detail::check_same_ctx(a, b);
  for (const auto& g : a.gens())
    if (!contains(b, g)) return false;
  return true;
}

template <Field F>
bool ideal_eq(const Ideal<F>& a, const Ideal<F>& b) {
  detail::check_same_ctx(a, b);
  const auto& ba = a.basis().polys;
  const auto& bb = b.basis().polys;
  if (ba.size() != bb.size()) return false;
  for (std::size_t i = 0; i < ba.size(); ++i)
    if (!(ba[i] == bb[i])) return false;
  return true;
}

namespace detail {

/// Lift into the auxiliary ring [t, x_1..x_n] (t first, so elim(1) orders it
/// out), multiply by tmul*t + cmul, and collect.
template <Field F>
Polynomial<F> lift_times(const Polynomial<F>& p, const F& tmul, const F& cmul,
                         MonomialOrder ord) {
  std::vector<Term<F>> terms;
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> e;
    e.reserve(t.mono.arity() + 1);
    e.push_back(0);
    for (std::size_t i = 0; i < t.mono.arity(); ++i)
      e.push_back(t.mono.exp(i));
    if (!cmul.is_zero()) terms.push_back({Monomial(e), t.coeff * cmul});
    if (!tmul.is_zero()) {
      e[0] = 1;
      terms.push_back({Monomial(e), t.coeff * tmul});
    }
  }
  return Polynomial<F>::from_terms(p.arity() + 1, ord, std::move(terms));
}

template <Field F>
Polynomial<F> project_drop_first(const Polynomial<F>& p, MonomialOrder ord) {
  std::vector<Term<F>> terms;
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> e(t.mono.exponents().begin() + 1,
                                 t.mono.exponents().end());
    terms.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial<F>::from_terms(p.arity() - 1, ord, std::move(terms));
}

}  // namespace detail

/// A cap B via the auxiliary-variable construction: eliminate t from
/// t*A + (1-t)*B with a block elimination order.
template <Field F>
Ideal<F> intersect(const Ideal<F>& a, const Ideal<F>& b) {
  detail::check_same_ctx(a, b);
  const F one = a.ctx()->one();
  const F zero = F::zero(a.ctx()->spec());
  MonomialOrder eord = MonomialOrder::elim(1);
  std::vector<Polynomial<F>> h;
  for (const auto& f : a.basis().polys)
    h.push_back(detail::lift_times(f, one, zero, eord));  // t*f
  for (const auto& g : b.basis().polys)
    h.push_back(detail::lift_times(g, -one, one, eord));  // (1-t)*g
  auto gb = reduce_basis(buchberger<F>(h, eord, a.ctx()->limits()));
  std::vector<Polynomial<F>> kept;
  for (const auto& p : gb.polys) {
    bool has_t = false;
    for (const auto& t : p.terms())
      if (t.mono.exp(0) > 0) {
        has_t = true;
        break;
      }
    if (!has_t)
      kept.push_back(
          detail::project_drop_first(p, MonomialOrder::degrevlex()));
  }
  return Ideal<F>(a.ctx(), std::move(kept));
}

/// A : g = (1/g) * (A cap (g)) for a single nonzero g. The principal factor
/// (g) is taken over the ambient polynomial ring -- no relations adjoined --
/// so every element of the intersection is an exact multiple of g; the
/// relations rejoin the result automatically through its own basis.
template <Field F>
Ideal<F> colon_single(const Ideal<F>& a, const Polynomial<F>& g) {
  if (g.is_zero()) throw HypothesisError("colon by zero polynomial");
  const F one = a.ctx()->one();
  const F zero = F::zero(a.ctx()->spec());
  MonomialOrder eord = MonomialOrder::elim(1);
  std::vector<Polynomial<F>> h;
  for (const auto& f : a.basis().polys)
    h.push_back(detail::lift_times(f, one, zero, eord));  // t*f
  h.push_back(detail::lift_times(g, -one, one, eord));    // (1-t)*g
  auto gb = reduce_basis(buchberger<F>(h, eord, a.ctx()->limits()));
  std::vector<Polynomial<F>> gens;
  for (const auto& p : gb.polys) {
    bool has_t = false;
    for (const auto& t : p.terms())
      if (t.mono.exp(0) > 0) {
        has_t = true;
        break;
      }
    if (has_t) continue;
    Polynomial<F> f = detail::project_drop_first(p, MonomialOrder::degrevlex());
    gens.push_back(exact_quotient(f, g, MonomialOrder::degrevlex()));
  }
  return Ideal<F>(a.ctx(), std::move(gens));
}

/// A : B = intersection over generators g of B of (A : g).
template <Field F>
Ideal<F> colon(const Ideal<F>& a, const Ideal<F>& b) {
  detail::check_same_ctx(a, b);
  if (b.gens().empty()) throw HypothesisError("colon by zero ideal");
  bool first = true;
  Ideal<F> acc = unit_ideal(a.ctx());
  for (const auto& g : b.gens()) {
    Ideal<F> part = colon_single(a, g);
    acc = first ? part : intersect(acc, part);
    first = false;
  }
  return acc;
}

/// Dimension of R/A from the leading-term ideal.
template <Field F>
int krull_dimension(const Ideal<F>& a) {
  if (a.is_unit_ideal())
    throw HypothesisError("krull_dimension of improper ideal");
  std::vector<Monomial> lts;
  for (const auto& g : a.basis().polys)
    lts.push_back(g.leading_monomial());
  return monomial_ideal_dimension(lts, a.ctx()->arity());
}

namespace detail {

/// Per-variable minimal pure-power exponents of the lead-term ideal;
/// empty optional when some variable has no pure power (positive dimension).
template <Field F>
std::optional<std::vector<std::uint32_t>> pure_power_box(const Ideal<F>& a) {
  const std::size_t n = a.ctx()->arity();
  std::vector<std::uint32_t> box(n, 0);
  for (const auto& g : a.basis().polys) {
    const Monomial& m = g.leading_monomial();
    if (m.is_one()) return std::vector<std::uint32_t>(n, 0);  // unit ideal
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m.exp(i) > 0) {
        ++support;
        var = i;
      }
    if (support == 1 && (box[var] == 0 || m.exp(var) < box[var]))
      box[var] = m.exp(var);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (box[i] == 0) return std::nullopt;
  return box;
}

}  // namespace detail

template <Field F>
bool is_zero_dimensional(const Ideal<F>& a) {
  return detail::pure_power_box(a).has_value();
}

/// lambda(R/A): the number of standard monomials, enumerated inside the box
/// of pure-power leading terms.
template <Field F>
long long colength(const Ideal<F>& a) {
  auto box = detail::pure_power_box(a);
  if (!box)
    throw HypothesisError(
        "colength requires a zero-dimensional ideal (no finite length)");
  const std::size_t n = a.ctx()->arity();
  std::vector<Monomial> lts;
  for (const auto& g : a.basis().polys)
    lts.push_back(g.leading_monomial());

  long long count = 0;
  std::vector<std::uint32_t> e(n, 0);
  for (;;) {
    bool standard = true;
    for (const auto& m : lts) {
      bool div = true;
      for (std::size_t i = 0; i < n; ++i)
        if (m.exp(i) > e[i]) {
          div = false;
          break;
        }
      if (div) {
        standard = false;
        break;
      }
    }
    if (standard) ++count;
    std::size_t i = 0;
    while (i < n) {
      if (++e[i] < (*box)[i]) break;
      e[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return count;
}

/// lambda(A/B) for nested cofinite B <= A.
template <Field F>
long long quotient_length(const Ideal<F>& a, const Ideal<F>& b) {
  detail::check_same_ctx(a, b);
  if (!ideal_leq(b, a))
    throw HypothesisError("quotient_length requires B contained in A");
  return colength(b) - colength(a);
}

/// mu(A): minimal number of generators of a homogeneous ideal contained in
/// the maximal ideal. Cofinite ideals use lambda(A/mA); the general case
/// discards generators lying in the ideal of the previously kept ones,
/// in ascending degree.
template <Field F>
long long min_generators(const Ideal<F>& a) {
  for (const auto& g : a.gens())
    if (g.is_constant())
      throw HypothesisError("min_generators requires A inside the maximal "
                            "ideal");
  if (a.gens().empty()) return 0;
  if (is_zero_dimensional(a)) {
    Ideal<F> ma = product(maximal_ideal(a.ctx()), a);
    return colength(ma) - colength(a);
  }
  std::vector<Polynomial<F>> sorted = a.gens();
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Polynomial<F>& f, const Polynomial<F>& g) {
                     return f.degree() < g.degree();
                   });
  std::vector<Polynomial<F>> kept;
  for (const auto& g : sorted) {
    if (kept.empty()) {
      kept.push_back(g);
      continue;
    }
    Ideal<F> k(a.ctx(), kept);
    if (!contains(k, g)) kept.push_back(g);
  }
  return static_cast<long long>(kept.size());
}

}  // namespace fibercone
