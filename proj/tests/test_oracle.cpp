#include "doctest.h"

#include "ffda/algebraic.hpp"
#include "ffda/cfrac.hpp"
#include "ffda/oracle.hpp"
#include "ffda/randgen.hpp"

using namespace ffda;

namespace {

OracleTheta golden_theta(const FieldConfig& f, int prec) {
  QuadraticSurd s(neg(Poly(f, {0, 1})), Poly::constant(f, 2),
                  Poly(f, {4, 0, 1}), 1);
  return OracleTheta::from_series(surd_to_series(s, prec));
}

}  // namespace

TEST_CASE("norm computation picks the exact route for rationals") {
  FieldConfig f3(3);
  RationalFn r(Poly::constant(f3, 1), Poly(f3, {1, 1}));
  OracleTheta theta = OracleTheta::from_rational(r, 12);
  NormValue at_den = product_norm(theta, Poly(f3, {1, 1}));
  CHECK(at_den.kind == NormValue::Kind::exact_zero);
  NormValue at_one = product_norm(theta, Poly::constant(f3, 1));
  CHECK(at_one.kind == NormValue::Kind::exact);
  CHECK(at_one.exp == 1);
}

TEST_CASE("degree-exact counting") {
  FieldConfig f5(5);
  CHECK(poly_count_of_degree(f5, 0) == 4);
  CHECK(poly_count_of_degree(f5, 1) == 20);
  CHECK(poly_count_of_degree(f5, 3) == 4 * 125);
}

TEST_CASE("best simultaneous table for the golden-ratio analogue") {
  FieldConfig f5(5);
  OracleTheta theta = golden_theta(f5, 24);
  auto rows = best_simultaneous({theta}, 4);
  QuadraticSurd s(neg(Poly(f5, {0, 1})), Poly::constant(f5, 2),
                  Poly(f5, {4, 0, 1}), 1);
  CFExpansion exp = cf_surd(s);
  for (const auto& row : rows) {
    CHECK_FALSE(row.zero_attained);
    CHECK_FALSE(row.precision_limited);
    // |x| ||x theta|| never beats 1/q, with equality exactly at convergent
    // denominators (every degree here, since all quotients are linear).
    CHECK(row.best_exp - row.degree == 1);
    auto [pn, qn] = cf_convergent(exp, row.degree);
    bool witnessed = false;
    for (const auto& w : row.witnesses) witnessed = witnessed || w == qn;
    CHECK(witnessed);
  }
}

TEST_CASE("rational target bottoms out at its denominator") {
  FieldConfig f3(3);
  OracleTheta theta =
      OracleTheta::from_rational(RationalFn(Poly::constant(f3, 1),
                                            Poly(f3, {1, 0, 1})),
                                 16);
  auto rows = best_simultaneous({theta}, 3);
  CHECK_FALSE(rows[0].zero_attained);
  CHECK_FALSE(rows[1].zero_attained);
  CHECK(rows[2].zero_attained);  // x = T^2+1 kills the norm
  bool has_den = false;
  for (const auto& w : rows[2].witnesses)
    has_den = has_den || w == Poly(f3, {1, 0, 1});
  CHECK(has_den);
}

TEST_CASE("pair of surds meets the existence bound at every horizon") {
  FieldConfig f3(3);
  Rng rng(141);
  std::vector<OracleTheta> thetas = {
      OracleTheta::from_series(surd_to_series(random_surd(rng, f3, 2), 24)),
      OracleTheta::from_series(surd_to_series(random_surd(rng, f3, 2), 24))};
  auto rows = best_simultaneous(thetas, 4);
  i64 n = 2;
  i64 cumulative = -1000;
  for (const auto& row : rows) {
    cumulative = std::max(cumulative, row.best_exp);
    // Some x with |x| <= q^d reaches max norm <= (q^{d+1})^{-1/n}.
    CHECK(n * cumulative >= row.degree + 1);
  }
}

TEST_CASE("serial and parallel scans agree bit for bit") {
  FieldConfig f5(5);
  OracleTheta theta = golden_theta(f5, 20);
  auto serial = best_simultaneous({theta}, 4, false);
  auto parallel = best_simultaneous({theta}, 4, true);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].best_exp == parallel[i].best_exp);
    REQUIRE(serial[i].witnesses.size() == parallel[i].witnesses.size());
    for (std::size_t j = 0; j < serial[i].witnesses.size(); ++j)
      CHECK(serial[i].witnesses[j] == parallel[i].witnesses[j]);
  }
}

TEST_CASE("empirical lower-bound constant") {
  FieldConfig f5(5);
  SUBCASE("single surd attains its approximation constant") {
    OracleTheta theta = golden_theta(f5, 30);
    LowerBoundReport rep = verify_lower_bound({theta}, 5);
    CHECK(rep.positive);
    CHECK_FALSE(less(rep.gamma_exp, ExpRational::integer(1)));
  }
  SUBCASE("rational component destroys positivity") {
    OracleTheta bad = OracleTheta::from_rational(
        RationalFn(Poly::constant(f5, 1), Poly(f5, {0, 1})), 20);
    LowerBoundReport rep = verify_lower_bound({bad}, 3);
    CHECK_FALSE(rep.positive);
  }
  SUBCASE("cubic pair stays stable") {
    XPoly f(f5, {Poly::constant(f5, 4), Poly(f5, {0, 4}), Poly::zero(f5),
                 Poly(f5, {0, 1})});
    auto seed = find_newton_seed(f);
    REQUIRE(seed);
    LaurentSeries alpha = hensel_root(f, *seed, 30).root;
    LaurentSeries alpha2 = mul(alpha, alpha);
    LowerBoundReport rep =
        verify_lower_bound({OracleTheta::from_series(alpha),
                            OracleTheta::from_series(alpha2)},
                           3);
    CHECK(rep.positive);
  }
}

TEST_CASE("product-minimum estimates") {
  FieldConfig f3(3);
  OracleTheta surd1 = OracleTheta::from_series(
      sqrt(LaurentSeries::from_poly(Poly(f3, {1, 0, 1}), 20)));
  OracleTheta surd2 = OracleTheta::from_series(
      sqrt(LaurentSeries::from_poly(Poly(f3, {2, 0, 1}), 20)));
  SUBCASE("rational component forces an exact zero") {
    OracleTheta r = OracleTheta::from_rational(
        RationalFn(Poly::constant(f3, 1), Poly(f3, {1, 1})), 20);
    BEstimate est = estimate_B({surd1, r}, ExpRational::integer(1), 3);
    CHECK(est.exact_zero);
    CHECK(est.estimate_exp == ExpRational::integer(0));
  }
  SUBCASE("surd pair stays below 1/q at lambda = 1") {
    BEstimate est = estimate_B({surd1, surd2}, ExpRational::integer(1), 4);
    CHECK_FALSE(est.exact_zero);
    CHECK_FALSE(less(est.estimate_exp, ExpRational::integer(1)));
  }
  SUBCASE("lambda = 0 estimates shrink with the horizon") {
    BEstimate small = estimate_B({surd1}, ExpRational::integer(0), 2);
    BEstimate large = estimate_B({surd1}, ExpRational::integer(0), 4);
    CHECK_FALSE(less(large.estimate_exp, small.estimate_exp));
  }
}

TEST_CASE("extremal witnesses") {
  SUBCASE("shifting by T certifies the first witness") {
    FieldConfig f3(3);
    LaurentSeries alpha = extremal_series(f3, 20);
    CHECK(frac_norm(mul_poly(alpha, Poly(f3, {0, 1}))).exponent() == 2);
  }
  SUBCASE("witness lists over two characteristics") {
    for (u32 p : {3u, 5u}) {
      FieldConfig f(p);
      auto rep = extremal_witnesses(f, 2, static_cast<int>(p) * 2 + 8);
      CHECK_FALSE(rep.witnesses.empty());
      bool has_T = false;
      for (const auto& w : rep.witnesses)
        has_T = has_T || w == Poly::monomial(f, 1, 1);
      CHECK(has_T);
    }
  }
  SUBCASE("insufficient precision is rejected") {
    FieldConfig f3(3);
    CHECK_THROWS_AS(extremal_witnesses(f3, 4, 8), PrecisionError);
  }
}

TEST_CASE("table cells can be recomputed directly") {
  FieldConfig f3(3);
  Rng rng(149);
  QuadraticSurd s = random_surd(rng, f3, 2);
  OracleTheta theta = OracleTheta::from_series(surd_to_series(s, 20));
  auto rows = best_simultaneous({theta}, 3);
  for (const auto& row : rows) {
    REQUIRE_FALSE(row.witnesses.empty());
    for (const auto& w : row.witnesses) {
      NormValue nv = product_norm(theta, w);
      CHECK(nv.kind == NormValue::Kind::exact);
      CHECK(nv.exp == row.best_exp);
    }
  }
}
