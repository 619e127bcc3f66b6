#include "doctest.h"

#include "ffda/algebraic.hpp"
#include "ffda/randgen.hpp"

using namespace ffda;

TEST_CASE("surd construction enforces the invariants") {
  FieldConfig f5(5);
  Poly D(f5, {4, 0, 1});  // T^2+4
  CHECK_THROWS_AS(QuadraticSurd(Poly::zero(f5), Poly::zero(f5), D, 1),
                  DomainError);
  // Perfect square radicand.
  CHECK_THROWS_AS(QuadraticSurd(Poly::zero(f5), Poly::constant(f5, 1),
                                Poly(f5, {4, 4, 1}), 1),
                  DomainError);
  // Odd degree radicand.
  CHECK_THROWS_AS(QuadraticSurd(Poly::zero(f5), Poly::constant(f5, 1),
                                Poly(f5, {0, 0, 0, 1}), 1),
                  DomainError);
  // Non-residue leading coefficient (2 mod 5).
  CHECK_THROWS_AS(QuadraticSurd(Poly::zero(f5), Poly::constant(f5, 1),
                                Poly(f5, {1, 0, 2}), 1),
                  DomainError);
  FieldConfig f2(2);
  CHECK_THROWS_AS(QuadraticSurd(Poly::zero(f2), Poly::constant(f2, 1),
                                Poly(f2, {1, 1, 1}), 1),
                  DomainError);
}

TEST_CASE("denominator divisibility is restored by scaling") {
  FieldConfig f5(5);
  // (T + sqrt(T^2+4)) / T^2: T^2 does not divide D - P^2 = 4.
  QuadraticSurd s(Poly(f5, {0, 1}), Poly(f5, {0, 0, 1}), Poly(f5, {4, 0, 1}),
                  1);
  Poly residue = sub(s.D(), mul(s.P(), s.P()));
  CHECK(divmod(residue, s.Q()).rem.is_zero());
  // Same value after normalization.
  LaurentSeries direct = surd_to_series(s, 10);
  LaurentSeries manual = div_poly(
      add_poly(sqrt(LaurentSeries::from_poly(Poly(f5, {4, 0, 1}), 16)),
               Poly(f5, {0, 1})),
      Poly(f5, {0, 0, 1}));
  CHECK(agree_below(direct, manual.truncated(10), 10));
}

TEST_CASE("surd series expansions") {
  FieldConfig f5(5);
  Poly D(f5, {4, 0, 1});
  SUBCASE("pure square root") {
    QuadraticSurd s(Poly::zero(f5), Poly::constant(f5, 1), D, 1);
    LaurentSeries ser = surd_to_series(s, 6);
    CHECK(ser.coeff(-1) == 1);
    CHECK(ser.coeff(1) == 2);
    CHECK(ser.coeff(3) == 3);
  }
  SUBCASE("golden-ratio analogue has valuation one") {
    QuadraticSurd s(Poly(f5, {0, 4}), Poly::constant(f5, 2), D, 1);
    LaurentSeries ser = surd_to_series(s, 6);
    CHECK(ser.lead_exp() == 1);
    CHECK(integral_part(ser).is_zero());
  }
  SUBCASE("linearity in the polynomial part") {
    QuadraticSurd a(Poly(f5, {0, 1}), Poly::constant(f5, 1), D, 1);
    QuadraticSurd b(Poly::zero(f5), Poly::constant(f5, 1), D, 1);
    LaurentSeries diff = sub(surd_to_series(a, 8), surd_to_series(b, 8));
    CHECK(integral_part(diff) == Poly(f5, {0, 1}));
    CHECK(frac_norm(diff).is_zero());
  }
}

TEST_CASE("conjugation") {
  FieldConfig f3(3);
  Rng rng(31);
  QuadraticSurd s = random_surd(rng, f3, 4);
  QuadraticSurd c = s.conjugate();
  CHECK(c.conjugate().sign() == s.sign());
  // Trace and norm kill the radical.
  CHECK(s.trace() == RationalFn(scalar_mul(s.P(), 2), s.Q()));
  CHECK(s.norm() ==
        RationalFn(sub(mul(s.P(), s.P()), s.D()), mul(s.Q(), s.Q())));
  // Numerically: alpha + conj is rational, alpha * conj matches the norm.
  LaurentSeries sum = add(surd_to_series(s, 12), surd_to_series(c, 12));
  LaurentSeries tr = LaurentSeries::from_rational(s.trace(), 12);
  CHECK(agree_below(sum, tr, 10));
}

TEST_CASE("surd series agree across precisions and satisfy their quadratic") {
  for (u32 p : {3u, 5u}) {
    FieldConfig f(p);
    Rng rng(500 + p);
    for (int i = 0; i < 15; ++i) {
      QuadraticSurd s = random_surd(rng, f, 4);
      int n = 10;
      CHECK(agree_below(surd_to_series(s, n), surd_to_series(s, 2 * n), n));
      // Q a^2 - 2 P a + (P^2 - D)/Q vanishes.
      LaurentSeries a = surd_to_series(s, 2 * n);
      LaurentSeries lhs = mul_poly(mul(a, a), s.Q());
      lhs = sub(lhs, mul_poly(a, scalar_mul(s.P(), 2)));
      Poly last = divmod(sub(mul(s.P(), s.P()), s.D()), s.Q()).quot;
      lhs = add_poly(lhs, last);
      CHECK(lhs.is_zero_to_prec());
    }
  }
}

TEST_CASE("quadratic extension arithmetic") {
  FieldConfig f5(5);
  Poly D(f5, {4, 0, 1});
  QuadExt theta(Poly(f5, {0, 4}), Poly::constant(f5, 1), Poly::constant(f5, 2),
                D);  // (-T + sqrt(D)) / 2
  QuadExt one = QuadExt::from_poly(Poly::constant(f5, 1), D);
  // theta satisfies x^2 + Tx - 1 = 0.
  QuadExt t = QuadExt::from_poly(Poly(f5, {0, 1}), D);
  QuadExt expr = sub(add(mul(theta, theta), mul(t, theta)), one);
  CHECK(expr.is_zero());
  // Valuations: v(theta) = 1, v(theta^2) = 2, v(1/theta) = -1.
  CHECK(theta.valuation() == 1);
  CHECK(mul(theta, theta).valuation() == 2);
  CHECK(div(one, theta).valuation() == -1);
  CHECK_THROWS_AS(sub(theta, theta).valuation(), DomainError);
  // Series view agrees with the surd route.
  QuadraticSurd s(Poly(f5, {0, 4}), Poly::constant(f5, 2), D, 1);
  CHECK(agree_below(theta.to_series(9), surd_to_series(s, 9), 9));
}

TEST_CASE("newton refinement of simple roots") {
  FieldConfig f5(5);
  SUBCASE("square root cross-check") {
    XPoly f(f5, {Poly(f5, {1, 0, 4}), Poly::zero(f5),
                 Poly::constant(f5, 1)});  // x^2 - (T^2+4)
    LaurentSeries x0 = LaurentSeries::from_poly(Poly(f5, {0, 1}), 3);
    HenselResult r = hensel_root(f, x0, 10);
    CHECK(r.residual_valuation >= 10);
    LaurentSeries direct = sqrt(LaurentSeries::from_poly(Poly(f5, {4, 0, 1}), 14));
    CHECK(agree_below(r.root, direct.truncated(10), 10));
  }
  SUBCASE("cleared cubic with a searched seed") {
    // T x^3 - T x - 1 over F_5.
    XPoly f(f5, {Poly::constant(f5, 4), Poly(f5, {0, 4}), Poly::zero(f5),
                 Poly(f5, {0, 1})});
    auto seed = find_newton_seed(f);
    REQUIRE(seed);
    HenselResult r = hensel_root(f, *seed, 12);
    CHECK(r.residual_valuation >= 12);
    LaurentSeries check = f.eval(r.root);
    CHECK(check.val_lower_bound() >= 12);
  }
  SUBCASE("linear polynomial is exact") {
    XPoly f(f5, {Poly(f5, {0, 4}), Poly::constant(f5, 1)});  // x - T
    LaurentSeries x0 = LaurentSeries::from_poly(Poly(f5, {0, 1}), 4);
    HenselResult r = hensel_root(f, x0, 10);
    CHECK(integral_part(r.root) == Poly(f5, {0, 1}));
    CHECK(frac_norm(r.root).is_zero());
  }
  SUBCASE("failed contraction is reported") {
    XPoly f(f5, {Poly(f5, {0, 4}), Poly::constant(f5, 1)});
    LaurentSeries bad = LaurentSeries::from_poly(Poly::constant(f5, 1), 4);
    CHECK_THROWS_AS(hensel_root(f, bad, 8), DomainError);
  }
}
