#include "ffda/quadform.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ffda {

BinaryQuadraticForm::BinaryQuadraticForm(Poly a, Poly b, Poly c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)),
      disc_(sub(mul(b_, b_), scalar_mul(mul(a_, c_), 4))) {
  const auto& f = a_.field();
  if (f.p() == 2) throw DomainError("binary quadratic forms require p > 2");
  if (a_.is_zero()) throw DomainError("form with vanishing leading coefficient");
  if (disc_.is_zero() || is_square(disc_))
    throw DomainError("discriminant must not be a perfect square");
}

bool BinaryQuadraticForm::splits_in_series_field() const {
  return disc_.degree() % 2 == 0 && field().sqrt(disc_.leading()).has_value();
}

Poly eval_form(const BinaryQuadraticForm& f, const Poly& x, const Poly& y) {
  Poly t = add(mul(f.a(), mul(x, x)), mul(f.b(), mul(x, y)));
  return add(t, mul(f.c(), mul(y, y)));
}

BinaryQuadraticForm transform(const BinaryQuadraticForm& f, const Poly& m00,
                              const Poly& m01, const Poly& m10,
                              const Poly& m11) {
  Poly a2 = eval_form(f, m00, m10);
  Poly c2 = eval_form(f, m01, m11);
  // Cross coefficient: 2a m00 m01 + b (m00 m11 + m01 m10) + 2c m10 m11.
  Poly b2 = add(scalar_mul(mul(f.a(), mul(m00, m01)), 2),
                mul(f.b(), add(mul(m00, m11), mul(m01, m10))));
  b2 = add(b2, scalar_mul(mul(f.c(), mul(m10, m11)), 2));
  return BinaryQuadraticForm(a2, b2, c2);
}

FormRoots roots(const BinaryQuadraticForm& f) {
  if (!f.splits_in_series_field())
    throw DomainError("roots lie outside the series field: discriminant has "
                      "odd degree or a non-residue leading coefficient");
  Poly two_a = scalar_mul(f.a(), 2);
  return {QuadraticSurd(neg(f.b()), two_a, f.disc(), +1),
          QuadraticSurd(neg(f.b()), two_a, f.disc(), -1)};
}

QExponent sigma_brute_force(const BinaryQuadraticForm& f, int brute_deg,
                            bool parallel) {
  const auto& fld = f.field();
  // Scalar invariance |f(cx, cy)| = |f(x, y)| lets the second coordinate be
  // zero or monic.
  std::vector<Poly> ys;
  ys.push_back(Poly::zero(fld));
  for (int d = 0; d <= brute_deg; ++d) {
    u64 cnt = poly_count(fld, d) / fld.q();
    for (u64 i = 0; i < cnt; ++i) ys.push_back(monic_poly_of_degree(fld, d, i));
  }
  u64 xs = poly_count(fld, brute_deg);
  i64 best = 0;
  bool any = false;
  bool vanished = false;
  for (const auto& y : ys) {
    Poly cy2 = mul(f.c(), mul(y, y));
    Poly by = mul(f.b(), y);
    i64 local_best = 0;
    bool local_any = false;
#ifdef _OPENMP
#pragma omp parallel if (parallel)
    {
      i64 tb = 0;
      bool ta = false, tv = false;
#pragma omp for schedule(static) nowait
      for (long long idx = 0; idx < static_cast<long long>(xs); ++idx) {
        Poly x = poly_from_index(fld, static_cast<u64>(idx));
        if (x.is_zero() && y.is_zero()) continue;
        if (y.is_zero() && !x.is_monic()) continue;
        Poly val = add(add(mul(f.a(), mul(x, x)), mul(by, x)), cy2);
        if (val.is_zero()) {
          tv = true;
          continue;
        }
        i64 v = -static_cast<i64>(val.degree());
        if (!ta || v > tb) tb = v, ta = true;
      }
#pragma omp critical
      {
        if (tv) vanished = true;
        if (ta && (!local_any || tb > local_best))
          local_best = tb, local_any = true;
      }
    }
#else
    for (u64 idx = 0; idx < xs; ++idx) {
      Poly x = poly_from_index(fld, idx);
      if (x.is_zero() && y.is_zero()) continue;
      if (y.is_zero() && !x.is_monic()) continue;
      Poly val = add(add(mul(f.a(), mul(x, x)), mul(by, x)), cy2);
      if (val.is_zero()) {
        vanished = true;
        continue;
      }
      i64 v = -static_cast<i64>(val.degree());
      if (!local_any || v > local_best) local_best = v, local_any = true;
    }
#endif
    if (local_any && (!any || local_best > best)) best = local_best, any = true;
  }
  (void)parallel;
  if (vanished)
    throw VerificationError("anisotropic form vanished on a nonzero pair");
  if (!any) throw DomainError("empty search space");
  // sigma = q^{-max v(f)}.
  return QExponent::finite(best);
}

QExponent sigma(const BinaryQuadraticForm& f, int brute_deg) {
  FormRoots r = roots(f);
  i64 period_route =
      max_period_quotient_degree(cf_surd(r.theta)) - f.disc().degree() / 2;
  int bound = brute_deg >= 0 ? brute_deg : f.disc().degree() / 2 + 2;
  QExponent brute = sigma_brute_force(f, bound, true);
  if (brute.exponent() != period_route)
    throw VerificationError(
        "form minimum disagrees between the period route (exp " +
        std::to_string(period_route) + ") and exhaustive search (exp " +
        std::to_string(brute.exponent()) + ")");
  return brute;
}

QExponent tau_theta(const BinaryQuadraticForm& f) {
  QExponent s = sigma(f);
  i64 tau_exp = s.exponent() + f.disc().degree() / 2;
  QExponent via_cf = tau_of_surd(roots(f).theta);
  if (via_cf.exponent() != tau_exp)
    throw VerificationError("approximation constant disagrees with the "
                            "continued-fraction route");
  return QExponent::finite(tau_exp);
}

ReducedForm reduce_with_representation(const BinaryQuadraticForm& f,
                                       const Poly& a0, const Poly& b0) {
  const auto& fld = f.field();
  ExtGcdResult g = ext_gcd(a0, b0);
  if (g.g.is_zero() || !g.g.is_constant() || g.g.coeff(0) != 1)
    throw DomainError("representation pair must be coprime");
  Poly alpha = eval_form(f, a0, b0);
  if (alpha.is_zero()) throw DomainError("pair represents zero");
  // u a0 + v b0 = 1, so det [[a0, -v], [b0, u]] = 1.
  Poly c0 = neg(g.v);
  Poly d0 = g.u;
  BinaryQuadraticForm probe = transform(f, a0, c0, b0, d0);
  // Shift the second column to cut the middle coefficient below the first.
  Poly shift = neg(divmod(probe.b(), alpha).quot);
  u32 half = fld.inv(2);
  Poly c1 = add(c0, scalar_mul(mul(shift, a0), half));
  Poly d1 = add(d0, scalar_mul(mul(shift, b0), half));
  BinaryQuadraticForm out = transform(f, a0, c1, b0, d1);
  if (out.a() != alpha)
    throw VerificationError("reduction changed the represented value");
  bool small = out.b().is_zero() || out.b().degree() < alpha.degree();
  if (!small)
    throw VerificationError("reduction failed to shrink the middle coefficient");
  if (out.disc() != f.disc())
    throw VerificationError("reduction changed the discriminant");
  return {out, a0, c1, b0, d1};
}

std::pair<Poly, Poly> apply_matrix(const Poly& m00, const Poly& m01,
                                   const Poly& m10, const Poly& m11,
                                   const Poly& x, const Poly& y) {
  return {add(mul(m00, x), mul(m01, y)), add(mul(m10, x), mul(m11, y))};
}

namespace {

struct Mat2 {
  Poly a, b, c, d;  // [[a, b], [c, d]]

  static Mat2 identity(const FieldConfig& f) {
    return {Poly::constant(f, 1), Poly::zero(f), Poly::zero(f),
            Poly::constant(f, 1)};
  }
  Poly det() const { return sub(mul(a, d), mul(b, c)); }
};

Mat2 matmul(const Mat2& x, const Mat2& y) {
  return {add(mul(x.a, y.a), mul(x.b, y.c)), add(mul(x.a, y.b), mul(x.b, y.d)),
          add(mul(x.c, y.a), mul(x.d, y.c)), add(mul(x.c, y.b), mul(x.d, y.d))};
}

Mat2 adjugate(const Mat2& m) { return {m.d, neg(m.b), neg(m.c), m.a}; }

}  // namespace

Automorph automorph(const BinaryQuadraticForm& f) {
  const auto& fld = f.field();
  FormRoots rts = roots(f);
  CFExpansion exp = cf_surd(rts.theta);
  int pre = exp.status.preperiod;
  int per = exp.status.period;

  // Convergent matrices [[P_{j-1}, P_{j-2}], [Q_{j-1}, Q_{j-2}]]; the matrix
  // fixing the root is C(pre+per) C(pre)^{-1}.
  auto conv_matrix = [&](int j) {
    Mat2 c = Mat2::identity(fld);
    for (int k = 0; k < j; ++k) {
      Mat2 step{exp.quotients[static_cast<std::size_t>(k)],
                Poly::constant(fld, 1), Poly::constant(fld, 1),
                Poly::zero(fld)};
      c = matmul(c, step);
    }
    return c;
  };
  Mat2 u = matmul(conv_matrix(pre + per), adjugate(conv_matrix(pre)));
  Poly det = u.det();
  bool det_is_one = det.is_constant() && det.coeff(0) == 1;
  if (!det_is_one) {
    // det = -1 happens on odd periods; going around twice restores +1.
    u = matmul(u, u);
    det = u.det();
  }
  if (!(det.is_constant() && det.coeff(0) == 1))
    throw VerificationError("automorph determinant is not 1");

  // eta = m00 - theta m10, an exact unit of the quadratic extension.
  auto eta_of = [&](const Mat2& m) {
    QuadExt theta_q = QuadExt::from_surd(rts.theta);
    QuadExt lhs = QuadExt::from_poly(m.a, f.disc());
    return sub(lhs, mul(theta_q, QuadExt::from_poly(m.c, f.disc())));
  };
  QuadExt eta = eta_of(u);
  if (eta.is_zero()) throw VerificationError("degenerate automorph");
  int ev = eta.valuation();
  if (ev <= 0) {
    // Wrong orientation; the inverse automorph contracts the linear factor.
    u = adjugate(u);
    eta = eta_of(u);
    ev = eta.valuation();
  }
  if (ev < 1) throw VerificationError("automorph multiplier is not small");

  // f(XU) = f(X) exactly.
  BinaryQuadraticForm moved = transform(f, u.a, u.b, u.c, u.d);
  if (moved.a() != f.a() || moved.b() != f.b() || moved.c() != f.c())
    throw VerificationError("matrix does not fix the form");
  // L(XU) = eta L(X): the second column must satisfy
  // m01 - theta m11 = -theta (m00 - theta m10).
  QuadExt theta_q = QuadExt::from_surd(rts.theta);
  QuadExt lhs = sub(QuadExt::from_poly(u.b, f.disc()),
                    mul(theta_q, QuadExt::from_poly(u.d, f.disc())));
  QuadExt rhs = mul(theta_q, eta);
  if (!add(lhs, rhs).is_zero())
    throw VerificationError("matrix does not scale the linear factor");

  return {u.a, u.b, u.c, u.d, eta, ev};
}

int largest_quotient_degree(const BinaryQuadraticForm& f) {
  FormRoots r = roots(f);
  int d = max_period_quotient_degree(cf_surd(r.theta));
  QExponent s = sigma(f);
  if (d != f.disc().degree() / 2 + s.exponent())
    throw VerificationError("period degree disagrees with the discriminant "
                            "and minimum identity");
  return d;
}

}  // namespace ffda
