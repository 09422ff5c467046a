#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fibercone/polynomial.hpp"

namespace fibercone {

template <Field F>
struct GroebnerBasis {
  MonomialOrder ord;
  std::vector<Polynomial<F>> polys;
  bool reduced = false;
};

struct BuchbergerLimits {
  std::uint64_t pair_cap = 200000;
};

/// Remainder of f on division by `basis`: no term of the result is divisible
/// by any basis leading term, and f - result lies in the generated ideal.
/// Deterministic: the highest reducible term is cancelled first, always by
/// the earliest-listed divisor.
template <Field F>
Polynomial<F> normal_form(const Polynomial<F>& f,
                          std::span<const Polynomial<F>> basis,
                          MonomialOrder ord) {
  std::vector<Polynomial<F>> realigned;
  realigned.reserve(basis.size());
  std::vector<const Polynomial<F>*> reducers;
  reducers.reserve(basis.size());
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    if (g.order() == ord) {
      reducers.push_back(&g);
    } else {
      realigned.push_back(g.with_order(ord));
      reducers.push_back(&realigned.back());
    }
  }

  Polynomial<F> h = f.with_order(ord);
  std::vector<Term<F>> rem;
  while (!h.is_zero()) {
    const Term<F> lt = h.leading_term();
    const Polynomial<F>* red = nullptr;
    for (const auto* g : reducers)
      if (g->leading_monomial().divides(lt.mono)) {
        red = g;
        break;
      }
    if (red) {
      h = h.minus_scaled(lt.coeff / red->leading_coeff(),
                         lt.mono.quotient_by(red->leading_monomial()), *red);
    } else {
      rem.push_back(lt);
      h = h.tail();
    }
  }
  return Polynomial<F>::from_terms(f.arity(), ord, std::move(rem));
}

/// S(f,g) = (lcm/LT(f)) f - (lcm/LT(g)) g; the cofactors absorb the leading
/// coefficients, so leading terms cancel exactly.
template <Field F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g,
                           MonomialOrder ord) {
  if (f.is_zero() || g.is_zero())
    throw Error("s_polynomial of zero polynomial");
  Polynomial<F> fs = f.with_order(ord);
  Polynomial<F> gs = g.with_order(ord);
  Monomial l = Monomial::lcm(fs.leading_monomial(), gs.leading_monomial());
  Polynomial<F> lhs = fs.times_term(l.quotient_by(fs.leading_monomial()),
                                    fs.leading_coeff().inv());
  Polynomial<F> rhs = gs.times_term(l.quotient_by(gs.leading_monomial()),
                                    gs.leading_coeff().inv());
  return lhs - rhs;
}

namespace detail {

struct PairKey {
  std::uint32_t lcm_deg;
  Monomial lcm;
  std::size_t i, j;
  MonomialOrder ord;

  bool operator<(const PairKey& o) const {
    if (lcm_deg != o.lcm_deg) return lcm_deg < o.lcm_deg;
    int c = ord.compare(lcm, o.lcm);
    if (c != 0) return c < 0;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

}  // namespace detail

/// Buchberger's algorithm with the normal selection strategy (ascending lcm
/// degree), the coprime-lead criterion and the chain criterion.
template <Field F>
GroebnerBasis<F> buchberger(std::span<const Polynomial<F>> gens,
                            MonomialOrder ord,
                            BuchbergerLimits limits = {}) {
  GroebnerBasis<F> out{ord, {}, false};
  auto& G = out.polys;
  std::set<detail::PairKey> queue;
  std::set<std::pair<std::size_t, std::size_t>> done;

  auto push_pairs = [&](std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      Monomial l = Monomial::lcm(G[i].leading_monomial(),
                                 G[n].leading_monomial());
      queue.insert({l.degree(), l, i, n, ord});
    }
  };

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    G.push_back(g.with_order(ord).monic());
    push_pairs(G.size() - 1);
  }

  std::uint64_t steps = 0;
  while (!queue.empty()) {
    detail::PairKey key = *queue.begin();
    queue.erase(queue.begin());
    done.insert({key.i, key.j});

    const Monomial& mi = G[key.i].leading_monomial();
    const Monomial& mj = G[key.j].leading_monomial();
    if (mi.coprime_with(mj)) continue;

    bool chain_skip = false;
    for (std::size_t k = 0; k < G.size() && !chain_skip; ++k) {
      if (k == key.i || k == key.j) continue;
      if (!G[k].leading_monomial().divides(key.lcm)) continue;
      auto p1 = std::minmax(key.i, k);
      auto p2 = std::minmax(key.j, k);
      if (done.count({p1.first, p1.second}) &&
          done.count({p2.first, p2.second}))
        chain_skip = true;
    }
    if (chain_skip) continue;

    if (++steps > limits.pair_cap)
      throw ResourceCapError("buchberger pair cap exceeded (" +
                             std::to_string(limits.pair_cap) + ")");

    Polynomial<F> s = s_polynomial(G[key.i], G[key.j], ord);
    Polynomial<F> r = normal_form<F>(s, G, ord);
    if (!r.is_zero()) {
      G.push_back(r.monic());
      push_pairs(G.size() - 1);
    }
  }
  return out;
}

/// Unique reduced basis: monic elements, none of whose terms is divisible by
/// the leading term of another, sorted ascending by leading monomial.
/// Idempotent.
template <Field F>
GroebnerBasis<F> reduce_basis(const GroebnerBasis<F>& gb) {
  std::vector<Polynomial<F>> polys;
  for (const auto& g : gb.polys)
    if (!g.is_zero()) polys.push_back(g.with_order(gb.ord).monic());
  std::stable_sort(polys.begin(), polys.end(),
                   [&](const Polynomial<F>& a, const Polynomial<F>& b) {
                     return gb.ord.less(a.leading_monomial(),
                                        b.leading_monomial());
                   });

  // minimalize: keep only elements whose lead is not divisible by an
  // earlier kept lead (equal leads collapse too)
  std::vector<Polynomial<F>> minimal;
  for (const auto& g : polys) {
    bool redundant = false;
    for (const auto& h : minimal)
      if (h.leading_monomial().divides(g.leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g);
  }

  // tail-reduce each element against the others
  GroebnerBasis<F> out{gb.ord, {}, true};
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<F>> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    out.polys.push_back(normal_form<F>(minimal[i], others, gb.ord).monic());
  }
  std::stable_sort(out.polys.begin(), out.polys.end(),
                   [&](const Polynomial<F>& a, const Polynomial<F>& b) {
                     return gb.ord.less(a.leading_monomial(),
                                        b.leading_monomial());
                   });
  return out;
}

/// f / g for exact multiples; failure to divide exactly is an engine defect
/// at the call sites (ideal membership was already established).
template <Field F>
Polynomial<F> exact_quotient(const Polynomial<F>& f, const Polynomial<F>& g,
                             MonomialOrder ord) {
  if (g.is_zero()) throw DivisionByZeroError("exact_quotient by zero");
  Polynomial<F> h = f.with_order(ord);
  Polynomial<F> gs = g.with_order(ord);
  std::vector<Term<F>> q;
  while (!h.is_zero()) {
    const Term<F>& lt = h.leading_term();
    if (!gs.leading_monomial().divides(lt.mono))
      throw DefectError("exact_quotient: dividend is not a multiple");
    Monomial u = lt.mono.quotient_by(gs.leading_monomial());
    F c = lt.coeff / gs.leading_coeff();
    q.push_back({u, c});
    h = h.minus_scaled(c, u, gs);
  }
  return Polynomial<F>::from_terms(f.arity(), ord, std::move(q));
}

/// Test oracle: every S-polynomial of basis pairs reduces to zero.
template <Field F>
bool is_groebner_basis(const GroebnerBasis<F>& gb) {
  for (std::size_t i = 0; i < gb.polys.size(); ++i)
    for (std::size_t j = i + 1; j < gb.polys.size(); ++j) {
      Polynomial<F> s = s_polynomial(gb.polys[i], gb.polys[j], gb.ord);
      if (!normal_form<F>(s, gb.polys, gb.ord).is_zero()) return false;
    }
  return true;
}

}  // namespace fibercone
