#pragma once

#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "fibercone/ideal.hpp"
#include "fibercone/rational.hpp"
#include "fibercone/rng.hpp"

namespace fibercone {

struct LocalOptions {
  int kmax = 20;       // Ratliff-Rush chain cap
  int red_cap = 30;    // reduction-number scan cap
  int retries = 8;     // resampling budget for randomized choices
  int fit_width = 3;   // persistence width for polynomial fits
  int table_cap = 40;  // Hilbert table length cap
};

namespace detail {

/// Shared, write-once cache of rebased powers of one ideal.
template <Field F>
class PowerCache {
 public:
  explicit PowerCache(const Ideal<F>& base) {
    pows_.push_back(unit_ideal(base.ctx()));
    pows_.push_back(rebased(base));
  }

  Ideal<F> get(int n) {
    if (n < 0) throw HypothesisError("negative ideal power");
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(pows_.size()) <= n)
      pows_.push_back(product(pows_.back(), pows_[1]));
    return pows_[n];
  }

 private:
  std::mutex mu_;
  std::deque<Ideal<F>> pows_;
};

}  // namespace detail

template <Field F>
struct ReductionData {
  Ideal<F> J;
  int r = -1;            // reduction number r_J(I)
  int s = -1;            // K-reduction number r_J^K(I)
  bool verified = false;
  int attempts = 0;
};

template <Field F>
struct RRClosure {
  int n = 0;
  Ideal<F> closure;
  int k_star = -1;
  bool verified = false;  // chain stabilized and the colon descent held
};

struct HilbertData {
  std::vector<long long> table;   // H(0..N)
  std::vector<long long> coeffs;  // g_0..g_d in the alternating binomial basis
  int fit_lo = -1, fit_hi = -1;   // window on which the fit was verified
  int width = 0;                  // persistence width used
};

struct SequenceReport {
  std::vector<long long> rho;  // rho_j, j = 0..truncation
  std::vector<long long> nu;   // nu_j
  std::vector<long long> v;    // v_n (dimension 2 only)
  int truncation = 0;
  bool complete = false;  // tails verified zero at the truncation index
};

/// The local data of one analysis: ring R, m-primary homogeneous I, and an
/// ideal K with I <= K <= m or K = R. Carries write-once caches for powers
/// of I, products K*I^n, their colengths, and Ratliff-Rush closures; sibling
/// setups over the same I share the power cache.
template <Field F>
class LocalSetup {
 public:
  LocalSetup(Ideal<F> I, Ideal<F> K, std::uint64_t seed,
             LocalOptions opts = {})
      : st_(std::make_shared<State>(std::move(I), std::move(K), seed, opts)) {
    validate();
  }

  const RingPtr<F>& ctx() const { return st_->I.ctx(); }
  const Ideal<F>& I() const { return st_->I; }
  const Ideal<F>& K() const { return st_->K; }
  bool k_is_unit() const { return st_->k_unit; }
  int dim() const { return ctx()->dim(); }
  std::uint64_t seed() const { return st_->seed; }
  const LocalOptions& options() const { return st_->opts; }

  Ideal<F> ipow(int n) const { return st_->powers->get(n); }

  /// K * I^n (just I^n when K = R), generators rebased.
  Ideal<F> KI(int n) const {
    if (st_->k_unit) return ipow(n);
    std::lock_guard<std::mutex> lock(st_->mu);
    auto it = st_->ki.find(n);
    if (it != st_->ki.end()) return it->second;
    Ideal<F> v = rebased(product(st_->K, st_->powers->get(n)));
    st_->ki.emplace(n, v);
    return v;
  }

  /// lambda(R / K I^n).
  long long len_KI(int n) const {
    {
      std::lock_guard<std::mutex> lock(st_->mu);
      auto it = st_->len_ki.find(n);
      if (it != st_->len_ki.end()) return it->second;
    }
    long long v = colength(KI(n));
    std::lock_guard<std::mutex> lock(st_->mu);
    st_->len_ki.emplace(n, v);
    return v;
  }

  /// lambda(R / I^n); 0 for n = 0.
  long long len_I(int n) const {
    if (n == 0) return 0;
    {
      std::lock_guard<std::mutex> lock(st_->mu);
      auto it = st_->len_i.find(n);
      if (it != st_->len_i.end()) return it->second;
    }
    long long v = colength(ipow(n));
    std::lock_guard<std::mutex> lock(st_->mu);
    st_->len_i.emplace(n, v);
    return v;
  }

  /// Sibling setup with another K, sharing the I-power cache.
  LocalSetup with_K(Ideal<F> K2) const {
    LocalSetup s(*this);
    s.st_ = std::make_shared<State>(st_->I, std::move(K2), st_->seed,
                                    st_->opts);
    s.st_->powers = st_->powers;
    s.validate();
    return s;
  }

  /// Memoized Ratliff-Rush closures, guarded by the J they were computed
  /// with (any reduction yields the same ideal; k_star depends on J).
  std::optional<RRClosure<F>> rr_cached(int n,
                                        const Ideal<F>& J) const {
    std::lock_guard<std::mutex> lock(st_->mu);
    if (!st_->rr_j || !same_gens(*st_->rr_j, J)) return std::nullopt;
    auto it = st_->rr.find(n);
    if (it == st_->rr.end()) return std::nullopt;
    return it->second;
  }

  void rr_store(const RRClosure<F>& c, const Ideal<F>& J) const {
    std::lock_guard<std::mutex> lock(st_->mu);
    if (!st_->rr_j || !same_gens(*st_->rr_j, J)) {
      st_->rr.clear();
      st_->rr_j = J;
    }
    st_->rr.emplace(c.n, c);
  }

 private:
  struct State {
    State(Ideal<F> I_, Ideal<F> K_, std::uint64_t seed_, LocalOptions opts_)
        : I(std::move(I_)),
          K(std::move(K_)),
          seed(seed_),
          opts(opts_),
          powers(std::make_shared<detail::PowerCache<F>>(I)) {}
    Ideal<F> I, K;
    bool k_unit = false;
    std::uint64_t seed;
    LocalOptions opts;
    std::shared_ptr<detail::PowerCache<F>> powers;
    mutable std::mutex mu;
    mutable std::map<int, Ideal<F>> ki;
    mutable std::map<int, long long> len_ki, len_i;
    mutable std::map<int, RRClosure<F>> rr;
    mutable std::optional<Ideal<F>> rr_j;
  };

  static bool same_gens(const Ideal<F>& a, const Ideal<F>& b) {
    if (a.gens().size() != b.gens().size()) return false;
    for (std::size_t i = 0; i < a.gens().size(); ++i)
      if (!(a.gens()[i] == b.gens()[i])) return false;
    return true;
  }

  void validate() {
    detail::check_same_ctx(st_->I, st_->K);
    if (st_->I.gens().empty())
      throw HypothesisError("I must be a nonzero ideal");
    for (const auto& g : st_->I.gens())
      if (g.is_constant())
        throw HypothesisError("I must be contained in the maximal ideal");
    if (!is_zero_dimensional(st_->I))
      throw HypothesisError("I is not m-primary (positive dimension)");
    st_->k_unit = st_->K.is_unit_ideal();
    if (!st_->k_unit) {
      for (const auto& g : st_->K.gens())
        if (g.is_constant())
          throw HypothesisError(
              "K must be contained in the maximal ideal or be the unit "
              "ideal");
      if (!ideal_leq(st_->I, st_->K))
        throw HypothesisError("I is not contained in K");
    }
  }

  std::shared_ptr<State> st_;
};

/// e_0(I) = lambda(R/J) for a verified minimal reduction J (a parameter
/// ideal of the Cohen-Macaulay ring R).
template <Field F>
long long multiplicity(const ReductionData<F>& red) {
  return colength(red.J);
}

/// Least n <= cap with I^{n+1} = J I^n.
template <Field F>
int reduction_number(const LocalSetup<F>& setup, const Ideal<F>& J,
                     int cap) {
  for (int n = 0; n <= cap; ++n) {
    if (ideal_eq(setup.ipow(n + 1), product(J, setup.ipow(n)))) return n;
  }
  throw ResourceCapError("no n <= " + std::to_string(cap) +
                         " with I^{n+1} = J I^n");
}

/// Least n <= cap with K I^{n+1} = K J I^n; equals reduction_number for
/// K = R.
template <Field F>
int k_reduction_number(const LocalSetup<F>& setup, const Ideal<F>& J,
                       int cap) {
  Ideal<F> KJ = setup.k_is_unit() ? rebased(J) : rebased(product(setup.K(), J));
  for (int n = 0; n <= cap; ++n) {
    if (ideal_eq(setup.KI(n + 1), product(KJ, setup.ipow(n)))) return n;
  }
  throw ResourceCapError("no n <= " + std::to_string(cap) +
                         " with K I^{n+1} = K J I^n");
}

namespace detail {

/// Homogeneous candidates for generic elements of I of degree `deg`:
/// monomial multiples of the generators reaching that degree.
template <Field F>
std::vector<Polynomial<F>> degree_slice_pool(const Ideal<F>& I, int deg) {
  std::vector<Polynomial<F>> pool;
  const std::size_t arity = I.ctx()->arity();
  for (const auto& g : I.gens()) {
    int gap = deg - g.degree();
    if (gap < 0) continue;
    if (gap == 0) {
      pool.push_back(g);
      continue;
    }
    // all monomials u of degree `gap`
    std::vector<std::uint32_t> e(arity, 0);
    e[0] = static_cast<std::uint32_t>(gap);
    for (;;) {
      pool.push_back(g.times_term(Monomial(e), I.ctx()->one()));
      // next composition of `gap` into `arity` parts
      std::size_t i = 0;
      while (i + 1 < arity && e[i] == 0) ++i;
      if (i + 1 >= arity) break;
      std::uint32_t head = e[i];
      e[i] = 0;
      e[0] = head - 1;
      e[i + 1] += 1;
    }
  }
  return pool;
}

template <Field F>
Polynomial<F> random_combination(const std::vector<Polynomial<F>>& pool,
                                 const RingPtr<F>& ctx, Rng& rng) {
  Polynomial<F> acc = ctx->zero_poly();
  for (const auto& g : pool)
    acc = acc + g.scaled(F::sample(rng, ctx->spec()));
  return acc;
}

}  // namespace detail

/// Verify a user-supplied J: d generators, contained in I, with a
/// reduction number within cap; computes r and s.
template <Field F>
ReductionData<F> verify_reduction(const LocalSetup<F>& setup,
                                  const Ideal<F>& J, int cap) {
  if (!ideal_leq(J, setup.I()))
    throw HypothesisError("J is not contained in I");
  const int d = setup.dim();
  if (min_generators(J) != d)
    throw HypothesisError("J must be minimally generated by dim R = " +
                          std::to_string(d) + " elements");
  ReductionData<F> red{J, 0, 0, false, 0};
  red.r = reduction_number(setup, J, cap);
  red.s = k_reduction_number(setup, J, std::max(cap, red.r));
  red.verified = true;
  return red;
}

/// Randomized minimal reduction: J is generated by d field combinations of
/// the degree slice of I at its top generator degree (plain generator
/// combinations in the equigenerated case), accepted when a reduction
/// number within cap exists. Deterministic given the setup seed.
template <Field F>
ReductionData<F> find_minimal_reduction(const LocalSetup<F>& setup,
                                        int cap = -1, int retries = -1) {
  const LocalOptions& opts = setup.options();
  if (cap < 0) cap = opts.red_cap;
  if (retries < 0) retries = opts.retries;
  const int d = setup.dim();

  // parameter ideal is its own minimal reduction
  if (min_generators(setup.I()) == d) {
    ReductionData<F> red{setup.I(), 0, 0, true, 0};
    red.r = reduction_number(setup, setup.I(), cap);
    red.s = k_reduction_number(setup, setup.I(), cap);
    return red;
  }

  int top = 0;
  for (const auto& g : setup.I().gens()) top = std::max(top, g.degree());
  std::vector<Polynomial<F>> pool =
      detail::degree_slice_pool(setup.I(), top);

  Rng rng(setup.seed() ^ 0x5eedf00du);
  std::string last_error = "no candidate sampled";
  for (int attempt = 1; attempt <= retries; ++attempt) {
    Rng arng = rng.fork(attempt);
    std::vector<Polynomial<F>> jg;
    for (int i = 0; i < d; ++i) {
      Polynomial<F> c = detail::random_combination(pool, setup.ctx(), arng);
      if (!c.is_zero()) jg.push_back(c);
    }
    if (static_cast<int>(jg.size()) != d) continue;
    Ideal<F> J(setup.ctx(), jg);
    try {
      if (min_generators(J) != d) {
        last_error = "degenerate candidate (mu(J) != d)";
        continue;
      }
      ReductionData<F> red = verify_reduction(setup, J, cap);
      red.attempts = attempt;
      return red;
    } catch (const ResourceCapError& e) {
      last_error = e.what();
    } catch (const HypothesisError& e) {
      last_error = e.what();
    }
  }
  throw ResourceCapError("no reduction found at cap " + std::to_string(cap) +
                         " after " + std::to_string(retries) +
                         " attempts (last: " + last_error + ")");
}

/// Ratliff-Rush closure of I^n with respect to K, as the stabilizing
/// ascending chain L_k = (K I^{n+k} : J^k). The result carries the first
/// stabilization step; for n >= 1 the colon descent
/// rr_K(I^n) : J = rr_K(I^{n-1}) is verified as a post-check.
template <Field F>
RRClosure<F> ratliff_rush_wrt(const LocalSetup<F>& setup, const Ideal<F>& J,
                              int n, int kmax = -1) {
  if (n < 0) throw HypothesisError("ratliff_rush_wrt needs n >= 0");
  if (kmax < 0) kmax = setup.options().kmax;
  if (auto hit = setup.rr_cached(n, J)) return *hit;

  RRClosure<F> out;
  out.n = n;
  Ideal<F> jpow = rebased(J);
  Ideal<F> prev = colon(setup.KI(n + 1), jpow);
  int k = 1;
  for (; k < kmax; ++k) {
    jpow = rebased(product(jpow, J));
    Ideal<F> next = colon(setup.KI(n + k + 1), jpow);
    if (!ideal_leq(prev, next))
      throw DefectError("Ratliff-Rush chain is not ascending at n=" +
                        std::to_string(n) + ", k=" + std::to_string(k));
    if (ideal_eq(prev, next)) {
      out.k_star = k;
      out.closure = prev;
      out.verified = true;
      break;
    }
    prev = next;
  }
  if (!out.verified) {
    out.closure = prev;  // unverified: last chain element, k_star unset
    return out;
  }

  if (!ideal_leq(setup.KI(n), out.closure))
    throw DefectError("rr_K(I^n) does not contain K I^n at n=" +
                      std::to_string(n));

  setup.rr_store(out, J);

  if (n >= 1) {
    RRClosure<F> below = ratliff_rush_wrt(setup, J, n - 1, kmax);
    if (below.verified &&
        !ideal_eq(colon(out.closure, J), below.closure))
      throw DefectError("colon descent rr_K(I^n) : J = rr_K(I^{n-1}) failed "
                        "at n=" + std::to_string(n));
  }
  return out;
}

template <Field F>
long long hilbert_function(const LocalSetup<F>& setup, int n) {
  if (n < 0) throw HypothesisError("hilbert_function needs n >= 0");
  return setup.len_KI(n);
}

namespace detail {

inline Rational binom(long long a, int b) {
  if (b < 0) return Rational(0);
  Rational acc(1);
  for (int i = 0; i < b; ++i)
    acc = acc * Rational(a - i) / Rational(i + 1);
  return acc;
}

/// P(n) = sum_i (-1)^i g_i binom(n + d - 1 - i, d - i).
inline Rational eval_binomial_basis(const std::vector<Rational>& g, int d,
                                    long long n) {
  Rational acc(0);
  for (int i = 0; i <= d; ++i) {
    Rational term = g[i] * binom(n + d - 1 - i, d - i);
    acc = (i % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

/// Solve for g_0..g_d through the d+1 points (ns[i], vals[i]).
inline std::vector<Rational> solve_binomial_fit(
    const std::vector<long long>& ns, const std::vector<long long>& vals,
    int d) {
  const int m = d + 1;
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i <= d; ++i) {
      Rational c = binom(ns[r] + d - 1 - i, d - i);
      a[r][i] = (i % 2 == 0) ? c : -c;
    }
    a[r][m] = Rational(vals[r]);
  }
  for (int col = 0; col < m; ++col) {
    int piv = -1;
    for (int r = col; r < m; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw DefectError("singular system in Hilbert fit");
    std::swap(a[col], a[piv]);
    Rational inv = a[col][col].inv();
    for (int c = col; c <= m; ++c) a[col][c] = a[col][c] * inv;
    for (int r = 0; r < m; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rational f = a[r][col];
      for (int c = col; c <= m; ++c) a[r][c] = a[r][c] - f * a[col][c];
    }
  }
  std::vector<Rational> g(m);
  for (int i = 0; i < m; ++i) g[i] = a[i][m];
  return g;
}

}  // namespace detail

/// Fit the Hilbert polynomial in the alternating binomial basis from a value
/// provider, extending the table until the d-th finite difference is
/// constant over a window of width w and the fit reproduces w further
/// values.
inline HilbertData fit_hilbert_polynomial(
    const std::function<long long(int)>& provider, int d, int w,
    int table_cap) {
  if (d < 1) throw HypothesisError("fit needs dimension >= 1");
  HilbertData out;
  out.width = w;
  auto value = [&](int n) {
    while (static_cast<int>(out.table.size()) <= n) {
      int k = static_cast<int>(out.table.size());
      out.table.push_back(provider(k));
    }
    return out.table[n];
  };

  for (int N = d + w; N + w <= table_cap; ++N) {
    value(N);
    // d-th finite differences over [d .. N]
    auto diff = [&](int n) {
      long long acc = 0;
      for (int i = 0; i <= d; ++i) {
        long long c = 1;
        for (int j = 0; j < i; ++j) c = c * (d - j) / (j + 1);
        acc += (i % 2 == 0 ? 1 : -1) * c * value(n - i);
      }
      return acc;
    };
    int run_lo = N;
    while (run_lo - 1 >= d && diff(run_lo - 1) == diff(N)) --run_lo;
    if (N - run_lo + 1 < w) continue;

    std::vector<long long> ns, vals;
    for (int n = N - d; n <= N; ++n) {
      ns.push_back(n);
      vals.push_back(value(n));
    }
    std::vector<Rational> g = detail::solve_binomial_fit(ns, vals, d);
    bool integral = true;
    for (const auto& c : g)
      if (c.den() != 1) integral = false;
    if (!integral) continue;

    // verified lower edge of exact agreement
    int lo = N;
    while (lo - 1 >= 0 &&
           detail::eval_binomial_basis(g, d, lo - 1) == Rational(value(lo - 1)))
      --lo;
    // persistence: w further values must match too
    bool tail_ok = true;
    for (int n = N + 1; n <= N + w; ++n)
      if (!(detail::eval_binomial_basis(g, d, n) == Rational(value(n)))) {
        tail_ok = false;
        break;
      }
    if (!tail_ok || N - lo + 1 < w) continue;

    out.fit_lo = lo;
    out.fit_hi = N + w;
    out.coeffs.clear();
    for (const auto& c : g) {
      out.coeffs.push_back(
          static_cast<long long>(c.num().convert_to<long long>()));
    }
    return out;
  }
  throw ResourceCapError("Hilbert fit persistence unreachable within table "
                         "cap " + std::to_string(table_cap));
}

/// Fit for lambda(R/K I^n) over the setup.
template <Field F>
HilbertData fit_hilbert_polynomial(const LocalSetup<F>& setup) {
  return fit_hilbert_polynomial(
      [&](int n) { return setup.len_KI(n); }, setup.dim(),
      setup.options().fit_width, setup.options().table_cap);
}

/// Evaluate the fitted polynomial at n (exact).
inline long long eval_hilbert_fit(const HilbertData& hd, int d, long long n) {
  std::vector<Rational> g;
  for (long long c : hd.coeffs) g.push_back(Rational(c));
  Rational v = detail::eval_binomial_basis(g, d, n);
  if (v.den() != 1) throw DefectError("non-integral Hilbert value");
  return v.num().convert_to<long long>();
}

/// rho_j = lambda(rr_K(I^{j+1}) / J rr_K(I^j)) and
/// nu_j = lambda(K I^{j+1} / K J I^j), truncated where nu vanishes and the
/// closures stabilize to K I^n; v_n (dimension 2) per the piecewise
/// definition with v_n = rho_{n-1} for n >= 2.
template <Field F>
SequenceReport rho_nu_sequences(const LocalSetup<F>& setup,
                                const ReductionData<F>& red, int upto = -1) {
  const LocalOptions& opts = setup.options();
  if (upto < 0) upto = std::max(red.r, red.s) + setup.dim() + 4;
  SequenceReport out;

  Ideal<F> KJ = setup.k_is_unit() ? rebased(red.J)
                                  : rebased(product(setup.K(), red.J));

  int zero_streak = 0;
  for (int j = 0; j <= upto; ++j) {
    RRClosure<F> rr_j = ratliff_rush_wrt(setup, red.J, j);
    RRClosure<F> rr_j1 = ratliff_rush_wrt(setup, red.J, j + 1);
    if (!rr_j.verified || !rr_j1.verified)
      throw ResourceCapError("unverified Ratliff-Rush closure at index " +
                             std::to_string(j));
    Ideal<F> jr = product(red.J, rr_j.closure);
    long long rho = quotient_length(rr_j1.closure, jr);

    Ideal<F> kji = product(KJ, setup.ipow(j));
    long long nu = colength(kji) - setup.len_KI(j + 1);
    if (nu < 0)
      throw DefectError("negative nu length at j=" + std::to_string(j));
    if (j >= red.s && nu != 0)
      throw DefectError("nu_j nonzero at j >= s (j=" + std::to_string(j) +
                        ")");

    out.rho.push_back(rho);
    out.nu.push_back(nu);

    bool stable = ideal_eq(rr_j1.closure, setup.KI(j + 1));
    if (rho == 0 && nu == 0 && stable)
      ++zero_streak;
    else
      zero_streak = 0;
    out.truncation = j;
    if (zero_streak >= 2 && j >= red.s) {
      out.complete = true;
      break;
    }
  }
  if (!out.complete)
    throw ResourceCapError("rho/nu sequences did not vanish by index " +
                           std::to_string(upto));

  if (setup.dim() == 2) {
    long long e0 = multiplicity(red);
    long long l0 = colength(ratliff_rush_wrt(setup, red.J, 0).closure);
    long long l1 = colength(ratliff_rush_wrt(setup, red.J, 1).closure);
    out.v.push_back(e0 - l0);
    out.v.push_back(e0 - l1 + 2 * l0);
    for (std::size_t j = 1; j < out.rho.size(); ++j)
      out.v.push_back(out.rho[j]);
  }
  return out;
}

/// New setup over R/(x): x joins the relations (regular-sequence check via
/// the dimension drop), I and K keep their generator lists.
template <Field F>
LocalSetup<F> quotient_by_element(const LocalSetup<F>& setup,
                                  const Polynomial<F>& x) {
  if (x.is_zero() || x.is_constant())
    throw HypothesisError("quotient element must be nonconstant");
  if (!x.is_homogeneous())
    throw HypothesisError("quotient element must be homogeneous");
  if (!contains(setup.I(), x))
    throw HypothesisError("quotient element must lie in I");
  std::vector<Polynomial<F>> rels = setup.ctx()->relations();
  rels.push_back(x.with_order(MonomialOrder::degrevlex()));
  RingPtr<F> ctx2 = make_ring<F>(setup.ctx()->vars(), setup.ctx()->spec(),
                                 std::move(rels), setup.ctx()->limits());
  Ideal<F> I2(ctx2, setup.I().gens());
  Ideal<F> K2 = setup.k_is_unit() ? unit_ideal(ctx2)
                                  : Ideal<F>(ctx2, setup.K().gens());
  return LocalSetup<F>(std::move(I2), std::move(K2), setup.seed(),
                       setup.options());
}

struct SuperficialRecord {
  int window = 0;
  int attempts = 0;
  bool verified = false;
  bool regular_in_ring = false;
  std::vector<std::string> failures;
};

template <Field F>
struct SuperficialCandidate {
  Polynomial<F> element;
  SuperficialRecord record;
};

/// Random degree-t combination of the least-degree slice of I, verified by
/// the operational colon conditions (K I^n : x) = K I^{n-1} and
/// (I^n : x) = I^{n-1} for n = 1..window, plus regularity in R via the
/// dimension drop. Failures are recorded and the candidate resampled.
template <Field F>
SuperficialCandidate<F> superficial_candidate(const LocalSetup<F>& setup,
                                              std::uint64_t seed,
                                              int window) {
  int least = setup.I().gens().front().degree();
  for (const auto& g : setup.I().gens())
    least = std::min(least, g.degree());
  std::vector<Polynomial<F>> pool;
  for (const auto& g : setup.I().gens())
    if (g.degree() == least) pool.push_back(g);

  SuperficialCandidate<F> out{setup.ctx()->zero_poly(), {}};
  out.record.window = window;
  Rng rng(seed ^ 0xa5a5a5a5ULL);
  for (int attempt = 1; attempt <= setup.options().retries; ++attempt) {
    Rng arng = rng.fork(attempt);
    Polynomial<F> x = detail::random_combination(pool, setup.ctx(), arng);
    out.record.attempts = attempt;
    if (x.is_zero()) {
      out.record.failures.push_back("zero candidate rejected");
      continue;
    }
    bool ok = true;
    // regular in R: relations + x still a regular sequence
    try {
      std::vector<Polynomial<F>> rels = setup.ctx()->relations();
      rels.push_back(x.with_order(MonomialOrder::degrevlex()));
      make_ring<F>(setup.ctx()->vars(), setup.ctx()->spec(), std::move(rels),
                   setup.ctx()->limits());
      out.record.regular_in_ring = true;
    } catch (const HypothesisError&) {
      out.record.failures.push_back("candidate is a zerodivisor in R");
      ok = false;
    }
    for (int n = 1; n <= window && ok; ++n) {
      if (!ideal_eq(colon_single(setup.KI(n), x), setup.KI(n - 1))) {
        out.record.failures.push_back("(K I^" + std::to_string(n) +
                                      " : x) != K I^" + std::to_string(n - 1));
        ok = false;
      }
      if (ok && !ideal_eq(colon_single(setup.ipow(n), x),
                          setup.ipow(n - 1))) {
        out.record.failures.push_back("(I^" + std::to_string(n) +
                                      " : x) != I^" + std::to_string(n - 1));
        ok = false;
      }
    }
    if (ok) {
      out.element = x;
      out.record.verified = true;
      return out;
    }
  }
  return out;  // unverified; record carries the failure trail
}

}  // namespace fibercone
