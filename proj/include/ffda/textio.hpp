#pragma once

#include <string>
#include <variant>

#include "json.hpp"

#include "ffda/algebraic.hpp"
#include "ffda/linforms.hpp"

namespace ffda {

using json = nlohmann::json;

/// Polynomial grammar: terms `c`, `T`, `T^k`, `c*T^k` joined by `+`/`-`,
/// coefficients decimal integers reduced mod p; whitespace-insensitive.
Poly parse_poly(const FieldConfig& field, const std::string& text);

/// Series input: `rat:<num>/<den>@<prec>` or `ser:<exp0>:<c0>,<c1>,...@<prec>`.
LaurentSeries parse_series_spec(const FieldConfig& field,
                                const std::string& text);

/// Surd input: `surd:(<P>+sqrt(<D>))/<Q>` or with `-`; the spelled-out
/// `s*sqrt` form is accepted too.
QuadraticSurd parse_surd_spec(const FieldConfig& field,
                              const std::string& text);

/// Any element spec: dispatches on the rat:/ser:/surd: prefix; bare
/// polynomial text is accepted as an exact rational.
struct ElementSpec {
  std::variant<RationalFn, LaurentSeries, QuadraticSurd> value;
  std::string text;       // original spelling
  int declared_prec = 0;  // `@prec` when present, else the supplied default

  bool is_rational() const {
    return std::holds_alternative<RationalFn>(value);
  }
  bool is_surd() const {
    return std::holds_alternative<QuadraticSurd>(value);
  }
  /// View as a series at the larger of the requested and declared
  /// precisions (exact values are re-expanded; stored series cannot grow).
  LaurentSeries as_series(int prec) const;
};

ElementSpec parse_element_spec(const FieldConfig& field,
                               const std::string& text, int default_prec);

json poly_to_json(const Poly& p);
json series_to_json(const LaurentSeries& s);
json surd_to_json(const QuadraticSurd& s);
json qexponent_to_json(const QExponent& e);
json exp_rational_to_json(const ExpRational& e);
json point_to_json(const IntegralPoint& x);

std::string format_surd(const QuadraticSurd& s);

}  // namespace ffda
