#pragma once

#include "ffda/linforms.hpp"

namespace ffda {

/// Witness that a solution of the transposed forms was constructed, with
/// its promised integer-exponent bounds and the re-verified achieved data.
struct TransferCertificate {
  IntegralPoint y;
  int D_exp = 0;  // promised ||M_j(y)|| <= q^(-D_exp)
  int Y_exp = 0;  // promised |y_i| <= q^(Y_exp)
  // The corresponding fractional bounds, kept as exact rationals for
  // comparison: ||M_j(y)|| <= q^(-D_rational), |y_i| <= q^(Y_rational).
  ExpRational D_rational;
  ExpRational Y_rational;
  std::vector<QExponent> achieved_norms;  // per transposed form
  std::vector<int> achieved_degrees;      // deg y_i, -1 for zero coordinates
};

/// Bilinear-form transfer: given n independent forms f_i and g_i in n
/// variables whose pairing psi(z, w) = sum f_i(z) g_i(w) has polynomial
/// coefficients on every z_i w_j product, a point z != 0 with
/// |f_i(z)| <= q^(-lambda_exp) yields a nonzero w with every
/// v(g_i(w)) >= floor((v(d) + n + lambda_exp - 2)/(n - 1)), d the
/// determinant of the g system.  Requires n >= 2.
///
/// The polynomial-coefficient hypothesis is checked numerically on basis
/// vectors to working precision; d_val is cross-checked against the
/// computed determinant.
IntegralPoint transfer_lemma(
    const std::vector<std::vector<LaurentSeries>>& f_forms,
    const std::vector<std::vector<LaurentSeries>>& g_forms, int d_val,
    const IntegralPoint& z, int lambda_exp);

/// The floor exponent the lemma guarantees for g_i(w).
int transfer_lemma_exponent(int n, int d_val, int lambda_exp);

/// Converts a good solution x of the forms L_i (norms below q^(-C_exp),
/// coordinates below q^(X_exp)) into a solution y of the transposed forms
/// M_j.  Requires C_exp >= 1, X_exp >= 0; both bounds are re-verified on
/// the given x before the construction runs.
TransferCertificate transfer(
    const std::vector<std::vector<LaurentSeries>>& theta,
    const IntegralPoint& x, int C_exp, int X_exp);

/// Finite-scale comparison of the two product minima related by the
/// transference duality.  Report only, not a proof.
struct DualityReport {
  // min over enumerated x != 0 of (max_i ||L_i(x)||)^n (max_j |x_j|)^m, as a
  // q-exponent (zero marker when a form value vanished exactly).
  QExponent primal_min;
  QExponent dual_min;  // the transposed analogue
  int search_deg = 0;
  int r_exp = 0;             // hypothesized primal floor under test
  bool primal_meets_r = false;
  bool relation_ok = false;  // primal_min >= q^((2-l)l) * dual_min^(l-1)
};

DualityReport check_duality_relation(
    const std::vector<std::vector<LaurentSeries>>& theta, int r_exp,
    int search_deg);

}  // namespace ffda
