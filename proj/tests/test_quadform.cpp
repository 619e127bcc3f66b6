#include "doctest.h"

#include "ffda/quadform.hpp"
#include "ffda/randgen.hpp"

using namespace ffda;

namespace {

// x^2 + d(T) x y - y^2, the bounded-quotient family.
BinaryQuadraticForm pell_form(const FieldConfig& f, const Poly& d) {
  return BinaryQuadraticForm(Poly::constant(f, 1), d,
                             Poly::constant(f, f.p() - 1));
}

}  // namespace

TEST_CASE("form construction and roots") {
  FieldConfig f5(5);
  BinaryQuadraticForm f = pell_form(f5, Poly(f5, {0, 1}));
  CHECK(f.disc() == Poly(f5, {4, 0, 1}));  // T^2+4
  FormRoots r = roots(f);
  CHECK(r.theta.P() == Poly(f5, {0, 4}));  // -T
  CHECK(r.theta.Q() == Poly::constant(f5, 2));
  CHECK(r.theta.sign() == 1);

  // Vieta: theta + phi = -b/a, theta * phi = c/a.
  RationalFn sum = add(RationalFn(r.theta.P(), r.theta.Q()),
                       RationalFn(r.phi.P(), r.phi.Q()));
  CHECK(sum == RationalFn(neg(f.b()), f.a()));
  // theta * phi = (P^2 - D)/Q^2.
  CHECK(r.theta.norm() == RationalFn(f.c(), f.a()));

  SUBCASE("odd-degree discriminant is rejected") {
    BinaryQuadraticForm g(Poly::constant(f5, 1), Poly::zero(f5),
                          Poly(f5, {0, 0, 0, 4}));  // disc = 16 T^3
    CHECK_FALSE(g.splits_in_series_field());
    CHECK_THROWS_AS(roots(g), DomainError);
  }
  SUBCASE("square discriminant is rejected at construction") {
    CHECK_THROWS_AS(BinaryQuadraticForm(Poly::constant(f5, 1),
                                        Poly(f5, {2, 1}), Poly::zero(f5)),
                    DomainError);
  }
  SUBCASE("characteristic two is rejected") {
    FieldConfig f2(2);
    CHECK_THROWS_AS(BinaryQuadraticForm(Poly::constant(f2, 1),
                                        Poly(f2, {1, 1}), Poly(f2, {1})),
                    DomainError);
  }
}

TEST_CASE("linear-factor separation matches the discriminant") {
  FieldConfig f3(3);
  Rng rng(121);
  for (int i = 0; i < 8; ++i) {
    BinaryQuadraticForm f = random_form(rng, f3, 4);
    FormRoots r = roots(f);
    QuadExt theta = QuadExt::from_surd(r.theta);
    QuadExt phi = QuadExt::from_surd(r.phi);
    QuadExt gap = mul(QuadExt::from_poly(f.a(), f.disc()), sub(theta, phi));
    CHECK(gap.valuation() == -f.disc().degree() / 2);
  }
}

TEST_CASE("form minimum via both routes") {
  FieldConfig f5(5);
  SUBCASE("unit-representing family has minimum one") {
    for (int d = 1; d <= 2; ++d) {
      BinaryQuadraticForm f = pell_form(f5, Poly::monomial(f5, 1, d));
      CHECK(sigma(f).exponent() == 0);
    }
  }
  SUBCASE("scaling shifts the minimum by the content") {
    FieldConfig f3(3);
    BinaryQuadraticForm f = pell_form(f3, Poly(f3, {0, 1}));
    Poly c = Poly::monomial(f3, 1, 1);  // content T
    BinaryQuadraticForm g(mul(f.a(), c), mul(f.b(), c), mul(f.c(), c));
    CHECK(sigma_brute_force(g, 3).exponent() ==
          sigma_brute_force(f, 3).exponent() - 1);
  }
  SUBCASE("random integral forms agree across routes") {
    FieldConfig f3(3);
    Rng rng(123);
    for (int i = 0; i < 6; ++i) {
      BinaryQuadraticForm f = random_form(rng, f3, 4);
      CHECK_NOTHROW(sigma(f));  // internal cross-check is fatal on mismatch
    }
  }
}

TEST_CASE("approximation constant of the root") {
  FieldConfig f5(5);
  SUBCASE("degree-d family") {
    for (int d = 1; d <= 2; ++d) {
      BinaryQuadraticForm f = pell_form(f5, Poly::monomial(f5, 1, d));
      CHECK(tau_theta(f).exponent() == d);
    }
  }
  SUBCASE("constant is always at most 1/q") {
    FieldConfig f3(3);
    Rng rng(125);
    for (int i = 0; i < 6; ++i) {
      BinaryQuadraticForm f = random_form(rng, f3, 4);
      CHECK(tau_theta(f).exponent() >= 1);
    }
  }
  SUBCASE("at least three attainment witnesses") {
    FieldConfig f3(3);
    BinaryQuadraticForm f = pell_form(f3, Poly(f3, {1, 1}));
    i64 tau_exp = tau_theta(f).exponent();
    LaurentSeries theta = surd_to_series(roots(f).theta, 24);
    int hits = 0;
    for (int d = 0; d <= 4; ++d) {
      u64 cnt = poly_count(f3, d) / 3;
      for (u64 i = 0; i < cnt; ++i) {
        Poly q = monic_poly_of_degree(f3, d, i);
        QExponent norm = frac_norm(mul_poly(theta, q));
        if (!norm.is_zero() && norm.exponent() - d == tau_exp) ++hits;
      }
    }
    CHECK(hits >= 3);
  }
}

TEST_CASE("representation reduction") {
  FieldConfig f5(5);
  BinaryQuadraticForm f(Poly(f5, {2, 1}), Poly(f5, {1, 0, 1}),
                        Poly(f5, {3, 2}));
  REQUIRE_FALSE(is_square(f.disc()));
  SUBCASE("unit pair keeps the first coefficient") {
    ReducedForm r =
        reduce_with_representation(f, Poly::constant(f5, 1), Poly::zero(f5));
    CHECK(r.form.a() == f.a());
    CHECK((r.form.b().is_zero() || r.form.b().degree() < r.form.a().degree()));
    CHECK(r.form.disc() == f.disc());
    CHECK(sub(mul(r.m00, r.m11), mul(r.m01, r.m10)) == Poly::constant(f5, 1));
  }
  SUBCASE("random coprime pairs preserve the discriminant") {
    Rng rng(127);
    int done = 0;
    while (done < 6) {
      Poly a0 = random_poly(rng, f5, 2);
      Poly b0 = random_poly(rng, f5, 2);
      if (a0.is_zero() && b0.is_zero()) continue;
      if (!(gcd(a0, b0) == Poly::constant(f5, 1))) continue;
      if (eval_form(f, a0, b0).is_zero()) continue;
      ReducedForm r = reduce_with_representation(f, a0, b0);
      CHECK(r.form.disc() == f.disc());
      CHECK(r.form.a() == eval_form(f, a0, b0));
      ++done;
    }
  }
  SUBCASE("non-coprime pairs are rejected") {
    Poly t = Poly::monomial(f5, 1, 1);
    CHECK_THROWS_AS(reduce_with_representation(f, t, mul(t, t)), DomainError);
  }
}

TEST_CASE("automorphs") {
  FieldConfig f3(3);
  BinaryQuadraticForm f = pell_form(f3, Poly(f3, {0, 1}));
  Automorph a = automorph(f);
  SUBCASE("fixes the form with determinant one") {
    CHECK(sub(mul(a.m00, a.m11), mul(a.m01, a.m10)) == Poly::constant(f3, 1));
    BinaryQuadraticForm moved = transform(f, a.m00, a.m01, a.m10, a.m11);
    CHECK(moved.a() == f.a());
    CHECK(moved.b() == f.b());
    CHECK(moved.c() == f.c());
    CHECK(a.eta_exp >= 1);
  }
  SUBCASE("multiplier exponent doubles with the square") {
    CHECK(mul(a.eta, a.eta).valuation() == 2 * a.eta_exp);
  }
  SUBCASE("orbit preserves the value and contracts the factor") {
    FormRoots r = roots(f);
    QuadExt theta = QuadExt::from_surd(r.theta);
    Poly x = Poly::constant(f3, 1);
    Poly y = Poly::zero(f3);
    Poly value = eval_form(f, x, y);
    int prev = sub(QuadExt::from_poly(x, f.disc()),
                   mul(theta, QuadExt::from_poly(y, f.disc())))
                   .valuation();
    for (int step = 0; step < 3; ++step) {
      auto [nx, ny] = apply_matrix(a.m00, a.m01, a.m10, a.m11, x, y);
      x = nx;
      y = ny;
      CHECK(eval_form(f, x, y) == value);
      int now = sub(QuadExt::from_poly(x, f.disc()),
                    mul(theta, QuadExt::from_poly(y, f.disc())))
                    .valuation();
      CHECK(now == prev + a.eta_exp);
      prev = now;
    }
  }
  SUBCASE("random forms have verified automorphs") {
    Rng rng(129);
    for (int i = 0; i < 5; ++i) {
      BinaryQuadraticForm g = random_form(rng, f3, 4);
      Automorph ag = automorph(g);
      CHECK(ag.eta_exp >= 1);
    }
  }
}

TEST_CASE("largest quotient degree identity") {
  FieldConfig f3(3);
  SUBCASE("integral element of degree two") {
    BinaryQuadraticForm f = pell_form(f3, Poly(f3, {1, 0, 1}));
    CHECK(largest_quotient_degree(f) == 2);
    CHECK(f.disc().degree() / 2 == 2);
    CHECK(sigma(f).exponent() == 0);
  }
  SUBCASE("random forms satisfy the identity") {
    Rng rng(131);
    for (int i = 0; i < 5; ++i) {
      BinaryQuadraticForm f = random_form(rng, f3, 4);
      CHECK_NOTHROW(largest_quotient_degree(f));
    }
  }
  SUBCASE("content does not move the quotient bound") {
    BinaryQuadraticForm f = pell_form(f3, Poly(f3, {0, 1}));
    Poly c = Poly::monomial(f3, 1, 1);
    BinaryQuadraticForm g(mul(f.a(), c), mul(f.b(), c), mul(f.c(), c));
    CHECK(largest_quotient_degree(g) == largest_quotient_degree(f));
    CHECK(sigma(g).exponent() == -1);
  }
}

TEST_CASE("conditional lower bound from the factorization identity") {
  FieldConfig f3(3);
  Rng rng(133);
  for (int i = 0; i < 6; ++i) {
    QuadraticSurd theta = random_surd(rng, f3, 2);
    // Build the form with theta as a root: Q x^2 - 2P xy + ((P^2-D)/Q) y^2.
    Poly cc = divmod(sub(mul(theta.P(), theta.P()), theta.D()), theta.Q()).quot;
    BinaryQuadraticForm f(theta.Q(), scalar_mul(theta.P(), f3.p() - 2), cc);
    // disc = 4D.
    CHECK(f.disc() == scalar_mul(theta.D(), 4));
    i64 sig = sigma_brute_force(f, f.disc().degree() / 2 + 2).exponent();
    int half = f.disc().degree() / 2;
    QuadExt th = QuadExt::from_surd(roots(f).theta);
    QuadExt ph = QuadExt::from_surd(roots(f).phi);
    int gap_val = sub(th, ph).valuation();
    LaurentSeries view = surd_to_series(roots(f).theta, 40);
    for (int d = 0; d <= 6; ++d) {
      u64 cnt = poly_count(f3, d) / 3;
      for (u64 k = 0; k < cnt; ++k) {
        Poly q = monic_poly_of_degree(f3, d, k);
        QExponent norm = frac_norm(mul_poly(view, q));
        REQUIRE_FALSE(norm.is_zero());
        // Condition ||Q theta|| < |theta - phi| |Q|.
        if (norm.exponent() > gap_val - d) {
          // Then |Q| ||Q theta|| >= |disc|^{-1/2} sigma.
          CHECK(norm.exponent() - d <= half + sig);
        }
      }
    }
  }
}
