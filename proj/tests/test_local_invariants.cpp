#include <catch2/catch_amalgamated.hpp>

#include "fibercone/local_invariants.hpp"
#include "fibercone/prime_field.hpp"
#include "fibercone/rational.hpp"

using namespace fibercone;

namespace {

using QPoly = Polynomial<Rational>;
using QIdeal = Ideal<Rational>;

RingPtr<Rational> kxy() {
  static RingPtr<Rational> ctx = make_ring<Rational>({"x", "y"}, {});
  return ctx;
}

QIdeal ideal(const RingPtr<Rational>& ctx,
             std::initializer_list<const char*> gens) {
  std::vector<QPoly> ps;
  for (const char* g : gens) ps.push_back(ctx->poly(g));
  return QIdeal(ctx, std::move(ps));
}

}  // namespace

TEST_CASE("maximal ideal") {
  auto m = maximal_ideal(kxy());
  CHECK(colength(m) == 1);
  auto rel = kxy()->poly("x^3 + y^3");
  auto ctx = make_ring<Rational>({"x", "y"}, {}, {rel});
  CHECK(colength(maximal_ideal(ctx)) == 1);
}

TEST_CASE("setup validation") {
  auto I = ideal(kxy(), {"x^2", "y^2"});
  auto m = maximal_ideal(kxy());
  CHECK_NOTHROW(LocalSetup<Rational>(I, m, 1));
  CHECK_NOTHROW(LocalSetup<Rational>(I, unit_ideal(kxy()), 1));
  // I = K required
  CHECK_THROWS_AS(LocalSetup<Rational>(m, I, 1), HypothesisError);
  // not m-primary
  CHECK_THROWS_AS(LocalSetup<Rational>(ideal(kxy(), {"x"}), m, 1),
                  HypothesisError);
}

TEST_CASE("parameter ideal is its own minimal reduction") {
  auto I = ideal(kxy(), {"x^2", "y^2"});
  LocalSetup<Rational> setup(I, maximal_ideal(kxy()), 7);
  auto red = find_minimal_reduction(setup);
  CHECK(red.r == 0);
  CHECK(red.verified);
  CHECK(ideal_eq(red.J, I));
  CHECK(multiplicity(red) == 4);
}

TEST_CASE("m^2 with J = (x^2, y^2) has reduction number 1") {
  auto m = maximal_ideal(kxy());
  auto I = power(m, 2);
  LocalSetup<Rational> setup(I, m, 7);
  auto J = ideal(kxy(), {"x^2", "y^2"});
  auto red = verify_reduction(setup, J, 10);
  CHECK(red.r == 1);
  CHECK(red.s <= red.r);
  CHECK(multiplicity(red) == 4);
}

TEST_CASE("random minimal reduction of m^2 in k[x,y]") {
  using F = PrimeField;
  F::Spec spec{};
  auto ctx = make_ring<F>({"x", "y"}, spec);
  auto m = maximal_ideal(ctx);
  LocalSetup<F> setup(power(m, 2), m, 42);
  auto red = find_minimal_reduction(setup);
  CHECK(red.verified);
  CHECK(red.r <= 2);
  CHECK(multiplicity(red) == 4);
  CHECK(min_generators(red.J) == 2);
  CHECK(ideal_leq(red.J, setup.I()));
}

TEST_CASE("k-reduction number with K = R equals reduction number") {
  using F = PrimeField;
  F::Spec spec{};
  auto ctx = make_ring<F>({"x", "y"}, spec);
  auto m = maximal_ideal(ctx);
  auto I = Ideal<F>(ctx, {ctx->poly("x^3"), ctx->poly("x^2*y"),
                          ctx->poly("y^3")});
  LocalSetup<F> sR(I, unit_ideal(ctx), 5);
  auto red = find_minimal_reduction(sR);
  CHECK(red.s == red.r);
  CHECK(k_reduction_number(sR, red.J, 10) ==
        reduction_number(sR, red.J, 10));
}

TEST_CASE("ratliff-rush closure witness: (x^4, x^3 y, x y^3, y^4)") {
  auto I = ideal(kxy(), {"x^4", "x^3*y", "x*y^3", "y^4"});
  auto m = maximal_ideal(kxy());
  LocalSetup<Rational> setup(I, unit_ideal(kxy()), 3);  // K = R: classical rr
  auto red = find_minimal_reduction(setup);
  auto rr1 = ratliff_rush_wrt(setup, red.J, 1);
  REQUIRE(rr1.verified);
  auto w = kxy()->poly("x^2*y^2");
  CHECK(contains(rr1.closure, w));
  CHECK_FALSE(contains(setup.I(), w));
  // oracle lengths via (I^2 : I)
  CHECK(colength(setup.I()) == 11);
  CHECK(colength(setup.ipow(2)) == 36);
  auto oracle = colon(setup.ipow(2), setup.I());
  CHECK(contains(oracle, w));
}

TEST_CASE("stable chain: parameter ideal, K = m") {
  auto I = ideal(kxy(), {"x^2", "y^2"});
  auto m = maximal_ideal(kxy());
  LocalSetup<Rational> setup(I, m, 3);
  auto red = find_minimal_reduction(setup);
  for (int n = 0; n <= 3; ++n) {
    auto rr = ratliff_rush_wrt(setup, red.J, n);
    REQUIRE(rr.verified);
    CHECK(rr.k_star == 1);
    CHECK(ideal_eq(rr.closure, setup.KI(n)));
  }
}

TEST_CASE("hilbert function tables") {
  auto m = maximal_ideal(kxy());
  LocalSetup<Rational> s1(m, m, 1);
  for (int n = 0; n <= 5; ++n)
    CHECK(hilbert_function(s1, n) == (n + 1) * (n + 2) / 2);

  auto I = power(m, 2);
  LocalSetup<Rational> s2(I, m, 1);
  for (int n = 0; n <= 4; ++n)
    CHECK(hilbert_function(s2, n) == 2 * n * n + 3 * n + 1);

  LocalSetup<Rational> s3(I, unit_ideal(kxy()), 1);
  CHECK(hilbert_function(s3, 0) == 0);
  for (int n = 1; n <= 4; ++n)
    CHECK(hilbert_function(s3, n) == n * (2 * n + 1));
}

TEST_CASE("hilbert polynomial fits") {
  auto m = maximal_ideal(kxy());

  // I = m, K = R: e = (1, 0, 0)
  LocalSetup<Rational> s1(m, unit_ideal(kxy()), 1);
  auto h1 = fit_hilbert_polynomial(s1);
  CHECK(h1.coeffs == std::vector<long long>{1, 0, 0});

  // I = m^2, K = R: e = (4, 1, 0)
  auto I = power(m, 2);
  LocalSetup<Rational> s2(I, unit_ideal(kxy()), 1);
  auto h2 = fit_hilbert_polynomial(s2);
  CHECK(h2.coeffs == std::vector<long long>{4, 1, 0});

  // I = m^2, K = m: g = (4, -1, 1)
  LocalSetup<Rational> s3(I, m, 1);
  auto h3 = fit_hilbert_polynomial(s3);
  CHECK(h3.coeffs == std::vector<long long>{4, -1, 1});

  // fitted polynomial reproduces the table on the fit window
  for (int n = h3.fit_lo; n <= h3.fit_hi; ++n)
    CHECK(eval_hilbert_fit(h3, 2, n) == h3.table[n]);
}

TEST_CASE("rho, nu, v sequences and coefficient identities") {
  using F = PrimeField;
  F::Spec spec{};
  auto ctx = make_ring<F>({"x", "y"}, spec);
  auto m = maximal_ideal(ctx);
  // pocket AMM instance: I = (x^3, x^2 y, y^3)
  auto I = Ideal<F>(ctx, {ctx->poly("x^3"), ctx->poly("x^2*y"),
                          ctx->poly("y^3")});

  SECTION("K = R: Huneke formulas e1 = sum v_n, e2 = sum (n-1) v_n") {
    LocalSetup<F> setup(I, unit_ideal(ctx), 11);
    auto red = find_minimal_reduction(setup);
    CHECK(multiplicity(red) == 9);
    CHECK(red.r == 2);
    auto seqs = rho_nu_sequences(setup, red);
    REQUIRE(seqs.complete);
    auto hd = fit_hilbert_polynomial(setup);
    REQUIRE(hd.coeffs.size() == 3);
    CHECK(hd.coeffs[0] == 9);  // e0 equals lambda(R/J)
    long long sum_v = 0, sum_nv = 0;
    for (std::size_t n = 1; n < seqs.v.size(); ++n) {
      sum_v += seqs.v[n];
      sum_nv += (static_cast<long long>(n) - 1) * seqs.v[n];
    }
    CHECK(hd.coeffs[1] == sum_v);
    CHECK(hd.coeffs[2] == sum_nv);
  }

  SECTION("K = m: generalized formulas with rr_K(I^0) correction") {
    LocalSetup<F> setup(I, m, 11);
    auto red = find_minimal_reduction(setup);
    CHECK(red.s == 1);
    auto seqs = rho_nu_sequences(setup, red);
    REQUIRE(seqs.complete);
    auto hd = fit_hilbert_polynomial(setup);
    REQUIRE(hd.coeffs.size() == 3);
    CHECK(hd.coeffs[0] == 9);
    long long l0 = colength(ratliff_rush_wrt(setup, red.J, 0).closure);
    long long sum_v = 0, sum_nv = 0;
    for (std::size_t n = 1; n < seqs.v.size(); ++n) {
      sum_v += seqs.v[n];
      sum_nv += (static_cast<long long>(n) - 1) * seqs.v[n];
    }
    CHECK(hd.coeffs[1] == sum_v - l0);
    CHECK(hd.coeffs[2] == sum_nv - l0);

    // nu_j vanishes from s on, equals one before (AMM laddering)
    for (int j = 0; j < red.s; ++j) CHECK(seqs.nu[j] == 1);
    for (std::size_t j = red.s; j < seqs.nu.size(); ++j)
      CHECK(seqs.nu[j] == 0);
  }
}

TEST_CASE("fundamental lemma identity in dimension 2") {
  using F = PrimeField;
  F::Spec spec{};
  auto ctx = make_ring<F>({"x", "y"}, spec);
  auto m = maximal_ideal(ctx);
  auto I = Ideal<F>(ctx, {ctx->poly("x^3"), ctx->poly("x^2*y"),
                          ctx->poly("y^3")});
  LocalSetup<F> setup(I, m, 11);
  auto red = find_minimal_reduction(setup);
  auto hd = fit_hilbert_polynomial(setup);
  auto seqs = rho_nu_sequences(setup, red);

  auto lrr = [&](int n) {
    return colength(ratliff_rush_wrt(setup, red.J, n).closure);
  };
  for (int n = 2; n <= seqs.truncation; ++n) {
    long long lhs = (eval_hilbert_fit(hd, 2, n) - lrr(n)) -
                    2 * (eval_hilbert_fit(hd, 2, n - 1) - lrr(n - 1)) +
                    (eval_hilbert_fit(hd, 2, n - 2) - lrr(n - 2));
    CHECK(lhs == seqs.rho[n - 1]);
  }
}

TEST_CASE("superficial element and quotient invariance") {
  using F = PrimeField;
  F::Spec spec{};
  auto ctx = make_ring<F>({"x", "y"}, spec);
  auto m = maximal_ideal(ctx);

  SECTION("linear forms are superficial for I = m") {
    LocalSetup<F> setup(m, m, 21);
    auto cand = superficial_candidate(setup, 21, 4);
    REQUIRE(cand.record.verified);
    CHECK(cand.element.degree() == 1);
  }

  SECTION("zero candidate rejected, record carries failures") {
    LocalSetup<F> setup(m, m, 21);
    auto cand = superficial_candidate(setup, 21, 3);
    CHECK(cand.record.attempts >= 1);
  }

  SECTION("r_J^K invariance modulo a verified superficial element") {
    auto I = power(m, 2);
    LocalSetup<F> setup(I, m, 9);
    auto red = find_minimal_reduction(setup);
    int window = std::max(red.r, red.s) + 3;
    auto cand = superficial_candidate(setup, 9, window);
    REQUIRE(cand.record.verified);

    auto qsetup = quotient_by_element(setup, cand.element);
    CHECK(qsetup.dim() == setup.dim() - 1);
    auto qred = verify_reduction(
        qsetup, Ideal<F>(qsetup.ctx(), red.J.gens()), 12);
    CHECK(qred.s == red.s);
  }
}

TEST_CASE("quotient_by_element rejects bad elements") {
  auto I = ideal(kxy(), {"x^2", "y^2"});
  LocalSetup<Rational> setup(I, maximal_ideal(kxy()), 1);
  CHECK_THROWS_AS(quotient_by_element(setup, kxy()->poly("x")),
                  HypothesisError);  // not in I
  CHECK_THROWS_AS(quotient_by_element(setup, kxy()->poly("0")),
                  HypothesisError);
}
