#include "ffda/transference.hpp"

#include <algorithm>

namespace ffda {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

int transfer_lemma_exponent(int n, int d_val, int lambda_exp) {
  return floor_div(d_val + n + lambda_exp - 2, n - 1);
}

IntegralPoint transfer_lemma(
    const std::vector<std::vector<LaurentSeries>>& f_forms,
    const std::vector<std::vector<LaurentSeries>>& g_forms, int d_val,
    const IntegralPoint& z, int lambda_exp) {
  int n = static_cast<int>(f_forms.size());
  if (n < 2) throw DomainError("transfer needs at least two forms");
  if (static_cast<int>(g_forms.size()) != n ||
      static_cast<int>(z.coords.size()) != n)
    throw DomainError("dimension mismatch in transfer");
  if (z.is_zero()) throw DomainError("transfer needs a nonzero point");

  // Pairing coefficients on products z_i w_j must be polynomials; check the
  // basis pairs to working precision.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      LaurentSeries c = mul(f_forms[0][static_cast<std::size_t>(i)],
                            g_forms[0][static_cast<std::size_t>(j)]);
      for (int s = 1; s < n; ++s)
        c = add(c, mul(f_forms[static_cast<std::size_t>(s)]
                              [static_cast<std::size_t>(i)],
                       g_forms[static_cast<std::size_t>(s)]
                              [static_cast<std::size_t>(j)]));
      if (c.prec() < 1 || !frac_norm(c).is_zero())
        throw DomainError("pairing coefficient on a product of coordinates "
                          "is not a polynomial to precision");
    }
  }

  LaurentSeries det = laurent_det(g_forms);
  if (det.is_zero_to_prec())
    throw PrecisionError("determinant of the second form system is not "
                         "certified nonzero");
  if (det.lead_exp() != d_val)
    throw DomainError("stated determinant valuation " + std::to_string(d_val) +
                      " disagrees with computed " +
                      std::to_string(det.lead_exp()));

  // Values f_i(z); all must meet the lambda bound.  The pivot has to attain
  // the minimal valuation among them: the cancellation argument divides
  // through by it.
  std::vector<LaurentSeries> fz;
  for (int i = 0; i < n; ++i)
    fz.push_back(laurent_dot(f_forms[static_cast<std::size_t>(i)], z));
  for (const auto& v : fz)
    if (!v.valuation().at_least(lambda_exp))
      throw DomainError("point does not meet the stated form bound");
  int pivot = -1;
  for (int i = n - 1; i >= 0; --i) {
    const auto& v = fz[static_cast<std::size_t>(i)];
    if (v.is_zero_to_prec()) continue;
    if (pivot < 0 ||
        v.lead_exp() < fz[static_cast<std::size_t>(pivot)].lead_exp())
      pivot = i;
  }
  if (pivot < 0)
    throw PrecisionError("all form values vanish to precision; no pivot");
  // A value hidden below precision could undercut the chosen minimum.
  for (const auto& v : fz)
    if (v.is_zero_to_prec() &&
        v.prec() < fz[static_cast<std::size_t>(pivot)].lead_exp())
      throw PrecisionError("a form value vanishes to a precision below the "
                           "pivot valuation");

  int R = transfer_lemma_exponent(n, d_val, lambda_exp);

  // System in w: the pairing row at valuation >= 1, and every g row except
  // the pivot at valuation >= R.
  std::vector<std::vector<LaurentSeries>> sys;
  std::vector<int> targets;
  {
    std::vector<LaurentSeries> pairing_row;
    for (int j = 0; j < n; ++j) {
      LaurentSeries c = mul(fz[0], g_forms[0][static_cast<std::size_t>(j)]);
      for (int s = 1; s < n; ++s)
        c = add(c, mul(fz[static_cast<std::size_t>(s)],
                       g_forms[static_cast<std::size_t>(s)]
                              [static_cast<std::size_t>(j)]));
      pairing_row.push_back(std::move(c));
    }
    sys.push_back(std::move(pairing_row));
    targets.push_back(1);
  }
  for (int i = 0; i < n; ++i) {
    if (i == pivot) continue;
    sys.push_back(g_forms[static_cast<std::size_t>(i)]);
    targets.push_back(R);
  }

  // Degree caps from the inverse system: every point of the solution set
  // satisfies v(w_j) >= min_i (v(B_ji) + r_i).
  auto inv_opt = laurent_inverse(sys);
  if (!inv_opt)
    throw PrecisionError("transfer system is singular to precision");
  const auto& B = *inv_opt;
  std::vector<int> bounds(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    int lo = B[static_cast<std::size_t>(j)][0].val_lower_bound() + targets[0];
    for (int i = 1; i < n; ++i)
      lo = std::min(lo, B[static_cast<std::size_t>(j)]
                         [static_cast<std::size_t>(i)].val_lower_bound() +
                            targets[static_cast<std::size_t>(i)]);
    bounds[static_cast<std::size_t>(j)] = lo >= 1 ? -1 : -lo;
  }

  GammaInstance inst;
  inst.rows = sys;
  inst.targets = targets;
  inst.deg_bounds = bounds;
  auto sol = solve_gamma(inst);
  if (!sol)
    throw VerificationError("transfer system reported unsolvable despite the "
                            "volume guarantee");

  // The pivot row was dropped from the system; its bound follows from the
  // pairing cancellation.  Re-verify every g value.
  for (int i = 0; i < n; ++i) {
    LaurentSeries gi = laurent_dot(g_forms[static_cast<std::size_t>(i)], *sol);
    if (!gi.valuation().at_least(R))
      throw VerificationError("transferred point missed a form bound");
  }
  return *sol;
}

TransferCertificate transfer(
    const std::vector<std::vector<LaurentSeries>>& theta,
    const IntegralPoint& x, int C_exp, int X_exp) {
  int n = static_cast<int>(theta.size());
  if (n == 0) throw DomainError("empty form system");
  int m = static_cast<int>(theta[0].size());
  if (static_cast<int>(x.coords.size()) != m)
    throw DomainError("solution size does not match the form system");
  if (C_exp < 1) throw DomainError("needs C_exp >= 1");
  if (X_exp < 0) throw DomainError("needs X_exp >= 0");
  if (x.is_zero()) throw DomainError("needs a nonzero solution");
  const auto& fld = theta[0][0].field();
  const int l = n + m;

  // Verify the stated bounds on x.
  for (const auto& c : x.coords)
    if (!c.is_zero() && c.degree() > X_exp)
      throw DomainError("coordinate exceeds the stated size bound");
  std::vector<LaurentSeries> lv;
  std::vector<Poly> w;
  for (int i = 0; i < n; ++i) {
    LaurentSeries v = laurent_dot(theta[static_cast<std::size_t>(i)], x);
    if (v.prec() < 1)
      throw PrecisionError("form value carries no certified integral part");
    QExponent norm = frac_norm(v);
    if (!norm.is_zero() && norm.exponent() < C_exp)
      throw DomainError("solution does not meet the stated norm bound");
    w.push_back(neg(integral_part(v)));
    lv.push_back(std::move(v));
  }

  // Assemble the paired systems over l variables each.
  int max_theta_prec = 0;
  for (const auto& row : theta)
    for (const auto& e : row)
      max_theta_prec = std::max(max_theta_prec, e.prec());
  int gen = max_theta_prec + l * (C_exp + X_exp + 4) + 16;
  auto mono = [&](i64 c, int e) {
    return LaurentSeries::monomial(fld, c, e, gen + e);
  };
  auto zero_entry = [&](int shift) {
    return LaurentSeries::zero_to(fld, gen + shift);
  };

  // First system, variables (x_1..x_m, w_1..w_n): rows i <= n carry
  // C^{-1}(L_i + w_i), rows beyond carry X^{-1} x_j.
  std::vector<std::vector<LaurentSeries>> f_forms;
  for (int i = 0; i < n; ++i) {
    std::vector<LaurentSeries> row;
    for (int j = 0; j < m; ++j)
      row.push_back(shift_exp(theta[static_cast<std::size_t>(i)]
                                   [static_cast<std::size_t>(j)],
                              -C_exp));
    for (int k = 0; k < n; ++k)
      row.push_back(k == i ? mono(1, -C_exp) : zero_entry(-C_exp));
    f_forms.push_back(std::move(row));
  }
  for (int j = 0; j < m; ++j) {
    std::vector<LaurentSeries> row;
    for (int k = 0; k < m; ++k)
      row.push_back(k == j ? mono(1, X_exp) : zero_entry(X_exp));
    for (int k = 0; k < n; ++k) row.push_back(zero_entry(X_exp));
    f_forms.push_back(std::move(row));
  }

  // Second system, variables (y_1..y_n, u_1..u_m): rows i <= n carry C y_i,
  // rows beyond carry X(u_j - M_j(y)).
  std::vector<std::vector<LaurentSeries>> g_forms;
  for (int i = 0; i < n; ++i) {
    std::vector<LaurentSeries> row;
    for (int k = 0; k < n; ++k)
      row.push_back(k == i ? mono(1, C_exp) : zero_entry(C_exp));
    for (int k = 0; k < m; ++k) row.push_back(zero_entry(C_exp));
    g_forms.push_back(std::move(row));
  }
  for (int j = 0; j < m; ++j) {
    std::vector<LaurentSeries> row;
    for (int s = 0; s < n; ++s)
      row.push_back(neg(shift_exp(theta[static_cast<std::size_t>(s)]
                                       [static_cast<std::size_t>(j)],
                                  -X_exp)));
    for (int k = 0; k < m; ++k)
      row.push_back(k == j ? mono(1, -X_exp) : zero_entry(-X_exp));
    g_forms.push_back(std::move(row));
  }

  IntegralPoint z;
  z.coords = x.coords;
  for (const auto& wi : w) z.coords.push_back(wi);

  int d_val = n * C_exp - m * X_exp;
  IntegralPoint wu = transfer_lemma(f_forms, g_forms, d_val, z, 0);

  int R = transfer_lemma_exponent(l, d_val, 0);
  TransferCertificate cert;
  cert.D_exp = R + X_exp;
  cert.Y_exp = C_exp - R;
  cert.D_rational = ExpRational(l - 2 + (n - 1) * X_exp + n * C_exp, l - 1);
  cert.Y_rational = ExpRational(2 - l + m * X_exp + (m - 1) * C_exp, l - 1);
  if (cert.D_exp < 1)
    throw VerificationError("transposed norm bound degenerated to >= 1");
  cert.y.coords.assign(wu.coords.begin(), wu.coords.begin() + n);
  if (cert.y.is_zero())
    throw VerificationError("transferred point has zero principal part");

  for (int j = 0; j < m; ++j) {
    LaurentSeries mj = mul_poly(theta[0][static_cast<std::size_t>(j)],
                                cert.y.coords[0]);
    for (int i = 1; i < n; ++i)
      mj = add(mj, mul_poly(theta[static_cast<std::size_t>(i)]
                                 [static_cast<std::size_t>(j)],
                            cert.y.coords[static_cast<std::size_t>(i)]));
    QExponent norm = frac_norm(mj);
    cert.achieved_norms.push_back(norm);
    if (!norm.is_zero() && norm.exponent() < cert.D_exp)
      throw VerificationError("transferred point missed the norm bound");
  }
  for (const auto& c : cert.y.coords) {
    cert.achieved_degrees.push_back(c.is_zero() ? -1 : c.degree());
    if (!c.is_zero() && c.degree() > cert.Y_exp)
      throw VerificationError("transferred point missed the size bound");
  }
  return cert;
}

namespace {

// max_i ||L_i(x)||^n * max_j |x_j|^m as a q-exponent for one candidate.
QExponent product_value(const std::vector<std::vector<LaurentSeries>>& theta,
                        const IntegralPoint& x, int n, int m) {
  i64 worst_norm = 0;
  bool any = false;
  for (int i = 0; i < n; ++i) {
    QExponent norm =
        frac_norm(laurent_dot(theta[static_cast<std::size_t>(i)], x));
    if (norm.is_zero()) return QExponent::make_zero();
    worst_norm = any ? std::min(worst_norm, norm.exponent()) : norm.exponent();
    any = true;
  }
  int max_deg = 0;
  for (const auto& c : x.coords)
    if (!c.is_zero()) max_deg = std::max(max_deg, c.degree());
  return QExponent::finite(static_cast<i64>(n) * worst_norm -
                           static_cast<i64>(m) * max_deg);
}

QExponent search_min(const std::vector<std::vector<LaurentSeries>>& theta,
                     int n, int m, int search_deg) {
  const auto& fld = theta[0][0].field();
  u64 per = poly_count(fld, search_deg);
  u64 total = 1;
  for (int j = 0; j < m; ++j) total *= per;
  QExponent best = QExponent::make_zero();
  bool any = false;
  for (u64 idx = 1; idx < total; ++idx) {
    u64 rest = idx;
    IntegralPoint x;
    for (int j = 0; j < m; ++j) {
      x.coords.push_back(poly_from_index(fld, rest % per));
      rest /= per;
    }
    QExponent v = product_value(theta, x, n, m);
    if (v.is_zero()) return v;
    if (!any || v.exponent() > best.exponent()) best = v;
    any = true;
  }
  return best;
}

}  // namespace

DualityReport check_duality_relation(
    const std::vector<std::vector<LaurentSeries>>& theta, int r_exp,
    int search_deg) {
  int n = static_cast<int>(theta.size());
  if (n == 0) throw DomainError("empty form system");
  int m = static_cast<int>(theta[0].size());
  DualityReport rep;
  rep.search_deg = search_deg;
  rep.r_exp = r_exp;
  rep.primal_min = search_min(theta, n, m, search_deg);

  std::vector<std::vector<LaurentSeries>> transposed(
      static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i)
      transposed[static_cast<std::size_t>(j)].push_back(
          theta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  rep.dual_min = search_min(transposed, m, n, search_deg);

  rep.primal_meets_r =
      !rep.primal_min.is_zero() && rep.primal_min.exponent() <= r_exp;
  int l = n + m;
  if (rep.primal_min.is_zero() || rep.dual_min.is_zero()) {
    rep.relation_ok = rep.primal_min.is_zero() && rep.dual_min.is_zero();
  } else {
    // primal >= q^((2-l)l) * dual^(l-1), exponent-wise.
    rep.relation_ok = rep.primal_min.exponent() <=
                      (l - 2) * l + (l - 1) * rep.dual_min.exponent();
  }
  return rep;
}

}  // namespace ffda
