#include "doctest.h"

#include "ffda/randgen.hpp"
#include "ffda/textio.hpp"

using namespace ffda;

TEST_CASE("polynomial grammar") {
  FieldConfig f5(5);
  CHECK(parse_poly(f5, "T^2+2*T+1") == Poly(f5, {1, 2, 1}));
  CHECK(parse_poly(f5, " T ^ 2 + 2 * T + 1 ") == Poly(f5, {1, 2, 1}));
  CHECK(parse_poly(f5, "7") == Poly::constant(f5, 2));
  CHECK(parse_poly(f5, "-T") == Poly(f5, {0, 4}));
  CHECK(parse_poly(f5, "T-T") == Poly::zero(f5));
  CHECK(parse_poly(f5, "0") == Poly::zero(f5));
  CHECK(parse_poly(f5, "3*T^10") == Poly::monomial(f5, 3, 10));

  SUBCASE("errors carry positions") {
    CHECK_THROWS_AS(parse_poly(f5, "T^"), ParseError);
    CHECK_THROWS_AS(parse_poly(f5, "1++T"), ParseError);
    CHECK_THROWS_AS(parse_poly(f5, "T*2"), ParseError);
    CHECK_THROWS_AS(parse_poly(f5, ""), ParseError);
    try {
      parse_poly(f5, "T^2+?");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 4);
    }
  }
}

TEST_CASE("polynomial text round-trips") {
  for (u32 p : {3u, 5u, 7u}) {
    FieldConfig f(p);
    Rng rng(200 + p);
    for (int i = 0; i < 50; ++i) {
      Poly a = random_poly(rng, f, 6);
      CHECK(parse_poly(f, a.to_string()) == a);
    }
  }
}

TEST_CASE("series specs") {
  FieldConfig f3(3);
  SUBCASE("rational form") {
    LaurentSeries s = parse_series_spec(f3, "rat:T^2+1/T@4");
    CHECK(s.prec() == 4);
    CHECK(s.lead_exp() == -1);
    CHECK(s.coeff(1) == 1);
  }
  SUBCASE("explicit form round-trips through its own printing") {
    LaurentSeries s = parse_series_spec(f3, "ser:-2:1,0,2@5");
    CHECK(s.lead_exp() == -2);
    CHECK(s.coeff(0) == 2);
    LaurentSeries again = parse_series_spec(f3, s.to_string());
    CHECK(agree_below(s, again, 5));
    CHECK(again.prec() == s.prec());
  }
  SUBCASE("malformed specs") {
    CHECK_THROWS_AS(parse_series_spec(f3, "rat:1/T"), ParseError);
    CHECK_THROWS_AS(parse_series_spec(f3, "ser:1@4"), ParseError);
    CHECK_THROWS_AS(parse_series_spec(f3, "x:1@4"), ParseError);
    CHECK_THROWS_AS(parse_series_spec(f3, "rat:1/0@4"), ParseError);
  }
}

TEST_CASE("surd specs") {
  FieldConfig f5(5);
  SUBCASE("plain spelling") {
    QuadraticSurd s = parse_surd_spec(f5, "surd:(-T+sqrt(T^2+4))/2");
    CHECK(s.P() == Poly(f5, {0, 4}));
    CHECK(s.Q() == Poly::constant(f5, 2));
    CHECK(s.D() == Poly(f5, {4, 0, 1}));
    CHECK(s.sign() == 1);
  }
  SUBCASE("sign placeholder spelling") {
    QuadraticSurd s = parse_surd_spec(f5, "surd:(0+s*sqrt(T^2+4))/2");
    CHECK(s.P().is_zero());
    CHECK(s.sign() == 1);
    QuadraticSurd m = parse_surd_spec(f5, "surd:(0-s*sqrt(T^2+4))/2");
    CHECK(m.sign() == -1);
  }
  SUBCASE("sum in the polynomial part") {
    QuadraticSurd s = parse_surd_spec(f5, "surd:(T+1-sqrt(T^2+4))/1");
    CHECK(s.sign() == -1);
    CHECK(s.P() == Poly(f5, {1, 1}));
  }
  SUBCASE("round trip through formatting") {
    FieldConfig f3(3);
    Rng rng(211);
    for (int i = 0; i < 20; ++i) {
      QuadraticSurd s = random_surd(rng, f3, 4);
      QuadraticSurd back = parse_surd_spec(f3, format_surd(s));
      CHECK(back.P() == s.P());
      CHECK(back.Q() == s.Q());
      CHECK(back.D() == s.D());
      CHECK(back.sign() == s.sign());
    }
  }
}

TEST_CASE("element dispatch") {
  FieldConfig f3(3);
  ElementSpec rational = parse_element_spec(f3, "rat:1/T+1@6", 10);
  CHECK(rational.is_rational());
  CHECK(rational.as_series(8).prec() >= 8);
  ElementSpec bare = parse_element_spec(f3, "T^2+1", 10);
  CHECK(bare.is_rational());
  ElementSpec surd = parse_element_spec(f3, "surd:(0+sqrt(T^2+2))/1", 10);
  CHECK(surd.is_surd());
  CHECK(surd.as_series(12).prec() >= 12);
}

TEST_CASE("json payload shapes") {
  FieldConfig f3(3);
  LaurentSeries s = parse_series_spec(f3, "ser:-1:1,2@6");
  json j = series_to_json(s);
  CHECK(j["p"] == 3);
  CHECK(j["lead_exp"] == -1);
  CHECK(j["prec"] == 6);
  // The embedded spec re-parses to the same series.
  LaurentSeries back = parse_series_spec(f3, j["spec"].get<std::string>());
  CHECK(agree_below(s, back, 6));

  CHECK(qexponent_to_json(QExponent::make_zero())["kind"] == "zero");
  CHECK(qexponent_to_json(QExponent::finite(-3))["e"] == -3);
  json er = exp_rational_to_json(ExpRational(10, 4));
  CHECK(er["num"] == 5);
  CHECK(er["den"] == 2);
}
