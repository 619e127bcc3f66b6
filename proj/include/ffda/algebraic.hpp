#pragma once

#include <optional>
#include <vector>

#include "ffda/laurent.hpp"

namespace ffda {

/// Univariate polynomial in an auxiliary variable x with coefficients in
/// F_p[T]; coeffs[k] multiplies x^k.
class XPoly {
public:
  explicit XPoly(FieldConfig field) : field_(field) {}
  XPoly(FieldConfig field, std::vector<Poly> coeffs)
      : field_(field), coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  const FieldConfig& field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Poly& coeff(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }

  XPoly derivative() const;
  LaurentSeries eval(const LaurentSeries& x) const;

private:
  FieldConfig field_;
  std::vector<Poly> coeffs_;
};

/// Exact representation (P + sign*sqrt(D))/Q of a quadratic element of
/// F_p((1/T)), with sqrt(D) on the canonical branch.
///
/// Invariants enforced at construction: Q != 0, D not a perfect square,
/// deg D even with quadratic-residue leading coefficient (so sqrt(D) exists
/// in the series field), and Q | D - P^2 (re-normalized by scaling P, Q, D
/// through by Q when needed).
class QuadraticSurd {
public:
  QuadraticSurd(Poly P, Poly Q, Poly D, int sign);

  const Poly& P() const { return P_; }
  const Poly& Q() const { return Q_; }
  const Poly& D() const { return D_; }
  int sign() const { return sign_; }
  const FieldConfig& field() const { return P_.field(); }

  QuadraticSurd conjugate() const { return QuadraticSurd(P_, Q_, D_, -sign_); }

  /// Sum with the conjugate, 2P/Q, as an exact rational.
  RationalFn trace() const;
  /// Product with the conjugate, (P^2 - D)/Q^2, as an exact rational.
  RationalFn norm() const;

private:
  Poly P_, Q_, D_;
  int sign_;
};

LaurentSeries surd_to_series(const QuadraticSurd& s, int prec);

/// Element (u + v*sqrt(D))/w of the quadratic extension k(sqrt(D)); exact
/// arithmetic working type with no reducedness invariants.
class QuadExt {
public:
  QuadExt(Poly u, Poly v, Poly w, Poly D);
  static QuadExt from_surd(const QuadraticSurd& s);
  static QuadExt from_poly(const Poly& p, const Poly& D);

  const Poly& u() const { return u_; }
  const Poly& v() const { return v_; }
  const Poly& w() const { return w_; }
  const Poly& D() const { return D_; }
  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
  bool is_rational() const { return v_.is_zero(); }

  QuadExt conjugate() const;

  friend QuadExt add(const QuadExt& a, const QuadExt& b);
  friend QuadExt sub(const QuadExt& a, const QuadExt& b);
  friend QuadExt mul(const QuadExt& a, const QuadExt& b);
  friend QuadExt div(const QuadExt& a, const QuadExt& b);

  LaurentSeries to_series(int prec) const;
  /// Exact valuation (throws DomainError on zero).
  int valuation() const;

private:
  Poly u_, v_, w_, D_;
};

struct HenselResult {
  LaurentSeries root;
  int residual_valuation;  // certified v(f(root)) >= this
};

/// Newton refinement of a simple root: from x0 with |f(x0)| < |f'(x0)|^2,
/// iterate x <- x - f(x)/f'(x) until v(f(x)) >= target_prec.  Coefficients
/// of f are exact, so precision can be grown as needed.
HenselResult hensel_root(const XPoly& f, const LaurentSeries& x0,
                         int target_prec);

/// Deterministic bounded search for a Newton starting point: series prefixes
/// with leading exponent in [-2, 2] and at most two terms.
std::optional<LaurentSeries> find_newton_seed(const XPoly& f);

}  // namespace ffda
