#pragma once

#include <cassert>
#include <string>
#include <vector>

#include "ffda/ring.hpp"

namespace ffda {

/// Exact absolute value: a power of q or zero.  The stored exponent e means
/// the value is q^(-e); larger e = smaller value.  Never a float.
struct QExponent {
  bool zero = true;
  i64 e = 0;

  static QExponent make_zero() { return {true, 0}; }
  static QExponent finite(i64 exp) { return {false, exp}; }

  bool is_zero() const { return zero; }
  i64 exponent() const {
    assert(!zero);
    return e;
  }

  friend QExponent mul(QExponent a, QExponent b) {
    if (a.zero || b.zero) return make_zero();
    return finite(a.e + b.e);
  }
  /// Value comparison (q^-a <= q^-b iff a >= b; zero is smallest).
  friend bool value_le(QExponent a, QExponent b) {
    if (a.zero) return true;
    if (b.zero) return false;
    return a.e >= b.e;
  }
  friend bool value_lt(QExponent a, QExponent b) {
    return value_le(a, b) && !(a.zero == b.zero && (a.zero || a.e == b.e));
  }
  bool operator==(const QExponent& o) const {
    return zero == o.zero && (zero || e == o.e);
  }
};

/// Exact rational q-exponent for reporting fractional bounds; value q^(-num/den).
struct ExpRational {
  i64 num = 0;
  i64 den = 1;

  ExpRational() = default;
  ExpRational(i64 n, i64 d);
  static ExpRational integer(i64 n) { return ExpRational(n, 1); }

  friend ExpRational add(ExpRational a, ExpRational b) {
    return ExpRational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend ExpRational sub(ExpRational a, ExpRational b) {
    return ExpRational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend bool less(ExpRational a, ExpRational b) {
    return a.num * b.den < b.num * a.den;
  }
  bool operator==(const ExpRational& o) const {
    return num == o.num && den == o.den;
  }
};

/// Valuation answer.  exact == true: v equals value.  exact == false: the
/// series is zero to its certified precision and v is only a lower bound
/// ("v >= value").
struct Valuation {
  bool exact = true;
  int value = 0;

  bool at_least(int r) const { return value >= r; }
};

/// Three-valued answer for predicates that precision alone cannot decide.
enum class Trilean { yes, no, unknown };

/// Truncated element of F_p((1/T)) with certified absolute precision.
///
/// coeffs[j] is the coefficient of (1/T)^(lead+j).  Every coefficient of
/// (1/T)^e with e < prec is certified (entries beyond the stored vector are
/// certified zero).  A nonzero series has coeffs[0] != 0 and valuation
/// lead; the empty vector is "zero to order prec", a first-class value
/// distinct from exact zero.
class LaurentSeries {
public:
  static LaurentSeries zero_to(FieldConfig field, int prec);
  static LaurentSeries from_poly(const Poly& p, int prec);
  static LaurentSeries from_rational(const RationalFn& r, int prec);
  /// Series with given leading exponent and coefficient list, certified to
  /// prec.  Leading/trailing zeros are normalized away.
  static LaurentSeries from_terms(FieldConfig field, int lead,
                                  std::vector<u32> coeffs, int prec);
  /// c * (1/T)^e
  static LaurentSeries monomial(FieldConfig field, i64 c, int e, int prec);

  const FieldConfig& field() const { return field_; }
  int prec() const { return prec_; }
  bool is_zero_to_prec() const { return coeffs_.empty(); }
  /// Leading exponent; requires a certified-nonzero series.
  int lead_exp() const {
    assert(!coeffs_.empty());
    return lead_;
  }
  const std::vector<u32>& raw_coeffs() const { return coeffs_; }

  /// Coefficient of (1/T)^e.  Requires e < prec.
  u32 coeff(int e) const {
    assert(e < prec_);
    if (coeffs_.empty() || e < lead_) return 0;
    std::size_t j = static_cast<std::size_t>(e - lead_);
    return j < coeffs_.size() ? coeffs_[j] : 0;
  }

  Valuation valuation() const {
    if (coeffs_.empty()) return {false, prec_};
    return {true, lead_};
  }
  /// Lower bound on the valuation (the valuation itself when nonzero).
  int val_lower_bound() const { return coeffs_.empty() ? prec_ : lead_; }

  /// Absolute value |.| as an exact q-power; the zero marker means
  /// "vanishes to certified precision".
  QExponent abs() const {
    if (coeffs_.empty()) return QExponent::make_zero();
    return QExponent::finite(lead_);
  }

  /// Drop certified information above new_prec (new_prec <= prec).
  LaurentSeries truncated(int new_prec) const;

  std::string to_string() const;

private:
  LaurentSeries(FieldConfig field, int lead, std::vector<u32> coeffs, int prec)
      : field_(field), lead_(lead), coeffs_(std::move(coeffs)), prec_(prec) {
    normalize();
  }

  void normalize();

  FieldConfig field_;
  int lead_;
  std::vector<u32> coeffs_;
  int prec_;
};

// Arithmetic.  Output precision follows the conservative propagation rules:
//   add/sub:  min(prec_a, prec_b)
//   mul:      min(prec_a + v(b), prec_b + v(a))   (v = valuation lower bound)
//   inv:      prec_a - 2 v(a)
//   sqrt:     prec_a - v(a)/2
// Multiplication/division by exact polynomials shifts precision by the
// polynomial's valuation only.
LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries neg(const LaurentSeries& a);
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries scalar_mul(const LaurentSeries& a, u32 c);
LaurentSeries mul_poly(const LaurentSeries& a, const Poly& b);
LaurentSeries add_poly(const LaurentSeries& a, const Poly& b);
LaurentSeries sub_from_poly(const Poly& b, const LaurentSeries& a);
/// Multiply by (1/T)^k (exact reindexing).
LaurentSeries shift_exp(const LaurentSeries& a, int k);
/// Throws DomainError on a certified-zero operand.
LaurentSeries inv(const LaurentSeries& a);
LaurentSeries div(const LaurentSeries& a, const LaurentSeries& b);
/// Exact long division by a nonzero polynomial.
LaurentSeries div_poly(const LaurentSeries& a, const Poly& b);

/// Square root with the canonical branch (leading coefficient representative
/// in [1, (p-1)/2]).  Requires p > 2, certified-nonzero input, even
/// valuation, and a quadratic-residue leading coefficient; each failure is a
/// distinct DomainError.
LaurentSeries sqrt(const LaurentSeries& a);

/// The unique polynomial A with v(alpha - A) >= 1.  Requires prec >= 1.
Poly integral_part(const LaurentSeries& a);
/// alpha - [alpha]; requires prec >= 1.
LaurentSeries frac_part(const LaurentSeries& a);
/// ||alpha|| = |alpha - [alpha]|; the zero marker means the fractional part
/// vanishes to certified precision.  Requires prec >= 1.
QExponent frac_norm(const LaurentSeries& a);

/// Is alpha a polynomial?  Decidable only up to precision.
Trilean is_polynomial(const LaurentSeries& a);

/// Do a and b agree on every coefficient below exponent n?  Requires both
/// precisions >= n.
bool agree_below(const LaurentSeries& a, const LaurentSeries& b, int n);

}  // namespace ffda
