#pragma once

#include "ffda/algebraic.hpp"
#include "ffda/cfrac.hpp"

namespace ffda {

/// f(x, y) = a x^2 + b xy + c y^2 with coefficients in F_p[T], p > 2,
/// a != 0, and discriminant b^2 - 4ac not a perfect square.
class BinaryQuadraticForm {
public:
  BinaryQuadraticForm(Poly a, Poly b, Poly c);

  const Poly& a() const { return a_; }
  const Poly& b() const { return b_; }
  const Poly& c() const { return c_; }
  const Poly& disc() const { return disc_; }
  const FieldConfig& field() const { return a_.field(); }

  /// sqrt(disc) lies in the series field: even degree, residue leading
  /// coefficient.
  bool splits_in_series_field() const;

private:
  Poly a_, b_, c_;
  Poly disc_;
};

Poly eval_form(const BinaryQuadraticForm& f, const Poly& x, const Poly& y);

/// f(m00 x + m01 y, m10 x + m11 y) as a form.
BinaryQuadraticForm transform(const BinaryQuadraticForm& f, const Poly& m00,
                              const Poly& m01, const Poly& m10,
                              const Poly& m11);

struct FormRoots {
  QuadraticSurd theta;  // canonical branch
  QuadraticSurd phi;
};

/// The two roots of f(x, 1) = 0 as exact surds (-b +- sqrt(disc))/(2a).
/// Throws DomainError when sqrt(disc) leaves the series field.
FormRoots roots(const BinaryQuadraticForm& f);

/// Smallest |f(x, y)| over nonzero integral pairs, as an exact q-power.
/// Computed from the period of the root's continued fraction and cross-
/// checked against exhaustive search up to brute_deg (default
/// deg(disc)/2 + 2); disagreement is a hard VerificationError.
QExponent sigma(const BinaryQuadraticForm& f, int brute_deg = -1);

/// Exhaustive route alone: min |f(x, y)| over nonzero pairs of degree
/// <= brute_deg, scalar-normalized.
QExponent sigma_brute_force(const BinaryQuadraticForm& f, int brute_deg,
                            bool parallel = false);

/// Approximation constant of the canonical root, q-exponent form; equals
/// the sigma route shifted by deg(disc)/2 and is cross-checked against the
/// period of the continued fraction.
QExponent tau_theta(const BinaryQuadraticForm& f);

struct ReducedForm {
  BinaryQuadraticForm form;  // first coefficient f(a0, b0), middle one small
  Poly m00, m01, m10, m11;   // unimodular: m00*m11 - m10*m01 = 1
};

/// Change of variables sending (1, 0) to the coprime pair (a0, b0), with the
/// middle coefficient reduced below the first: |b'| <= (1/q)|a'|.
ReducedForm reduce_with_representation(const BinaryQuadraticForm& f,
                                       const Poly& a0, const Poly& b0);

/// Unimodular matrix fixing f, built from one period of the root's
/// continued fraction, with the linear-factor multiplier eta: applying the
/// matrix scales x - theta*y by eta, v(eta) = eta_exp >= 1.
struct Automorph {
  Poly m00, m01, m10, m11;
  QuadExt eta;
  int eta_exp;
};

Automorph automorph(const BinaryQuadraticForm& f);

/// (m00 x + m01 y, m10 x + m11 y)
std::pair<Poly, Poly> apply_matrix(const Poly& m00, const Poly& m01,
                                   const Poly& m10, const Poly& m11,
                                   const Poly& x, const Poly& y);

/// Largest partial-quotient degree over the period of the root, verified
/// against deg(disc)/2 + exponent(sigma).
int largest_quotient_degree(const BinaryQuadraticForm& f);

}  // namespace ffda
