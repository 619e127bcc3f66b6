#include "ffda/algebraic.hpp"

#include <algorithm>

namespace ffda {

XPoly XPoly::derivative() const {
  std::vector<Poly> out;
  for (int k = 1; k <= degree(); ++k)
    out.push_back(scalar_mul(coeff(k), field_.reduce(k)));
  return XPoly(field_, std::move(out));
}

LaurentSeries XPoly::eval(const LaurentSeries& x) const {
  LaurentSeries acc = LaurentSeries::zero_to(field_, x.prec());
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (first) {
      acc = LaurentSeries::from_poly(coeff(k), x.prec());
      first = false;
      continue;
    }
    acc = add_poly(mul(acc, x), coeff(k));
  }
  if (first) return LaurentSeries::zero_to(field_, x.prec());
  return acc;
}

QuadraticSurd::QuadraticSurd(Poly P, Poly Q, Poly D, int sign)
    : P_(std::move(P)), Q_(std::move(Q)), D_(std::move(D)),
      sign_(sign >= 0 ? 1 : -1) {
  const auto& f = P_.field();
  if (f.p() == 2) throw DomainError("quadratic surds require p > 2");
  if (Q_.is_zero()) throw DomainError("surd with zero denominator");
  if (D_.is_zero() || is_square(D_))
    throw DomainError("surd radicand must not be a perfect square");
  if (D_.degree() % 2 != 0)
    throw DomainError("surd radicand has odd degree; sqrt leaves the series field");
  if (!f.sqrt(D_.leading()))
    throw DomainError("surd radicand leading coefficient is not a residue");
  // Closure of the complete-quotient step needs Q | D - P^2; scale through
  // by Q when the given triple violates it.
  Poly residue = sub(D_, mul(P_, P_));
  if (!divmod(residue, Q_).rem.is_zero()) {
    P_ = mul(P_, Q_);
    D_ = mul(D_, mul(Q_, Q_));
    Q_ = mul(Q_, Q_);
  }
}

RationalFn QuadraticSurd::trace() const {
  return RationalFn(scalar_mul(P_, 2), Q_);
}

RationalFn QuadraticSurd::norm() const {
  return RationalFn(sub(mul(P_, P_), D_), mul(Q_, Q_));
}

LaurentSeries surd_to_series(const QuadraticSurd& s, int prec) {
  // Work upstream of the division and truncate back down at the end.
  int qdeg = s.Q().degree();
  int root_prec = prec + qdeg + 2;
  int d_prec = root_prec + s.D().degree() / 2;
  LaurentSeries root = sqrt(LaurentSeries::from_poly(s.D(), d_prec));
  if (s.sign() < 0) root = neg(root);
  LaurentSeries num = add_poly(root.truncated(root_prec), s.P());
  LaurentSeries out = div_poly(num, s.Q());
  return out.truncated(std::min(out.prec(), prec));
}

QuadExt::QuadExt(Poly u, Poly v, Poly w, Poly D)
    : u_(std::move(u)), v_(std::move(v)), w_(std::move(w)), D_(std::move(D)) {
  if (w_.is_zero()) throw DomainError("quadratic-extension element with zero denominator");
}

QuadExt QuadExt::from_surd(const QuadraticSurd& s) {
  return QuadExt(s.P(), Poly::constant(s.field(), s.sign() > 0 ? 1 : -1),
                 s.Q(), s.D());
}

QuadExt QuadExt::from_poly(const Poly& p, const Poly& D) {
  return QuadExt(p, Poly::zero(p.field()), Poly::constant(p.field(), 1), D);
}

QuadExt QuadExt::conjugate() const { return QuadExt(u_, neg(v_), w_, D_); }

namespace {

void check_same_radicand(const QuadExt& a, const QuadExt& b) {
  if (a.D() != b.D())
    throw DomainError("quadratic-extension arithmetic over different radicands");
}

}  // namespace

QuadExt add(const QuadExt& a, const QuadExt& b) {
  check_same_radicand(a, b);
  return QuadExt(add(mul(a.u_, b.w_), mul(b.u_, a.w_)),
                 add(mul(a.v_, b.w_), mul(b.v_, a.w_)), mul(a.w_, b.w_),
                 a.D_);
}

QuadExt sub(const QuadExt& a, const QuadExt& b) {
  check_same_radicand(a, b);
  return QuadExt(sub(mul(a.u_, b.w_), mul(b.u_, a.w_)),
                 sub(mul(a.v_, b.w_), mul(b.v_, a.w_)), mul(a.w_, b.w_),
                 a.D_);
}

QuadExt mul(const QuadExt& a, const QuadExt& b) {
  check_same_radicand(a, b);
  Poly u = add(mul(a.u_, b.u_), mul(a.D_, mul(a.v_, b.v_)));
  Poly v = add(mul(a.u_, b.v_), mul(a.v_, b.u_));
  return QuadExt(std::move(u), std::move(v), mul(a.w_, b.w_), a.D_);
}

QuadExt div(const QuadExt& a, const QuadExt& b) {
  check_same_radicand(a, b);
  if (b.is_zero()) throw DomainError("division by zero quadratic-extension element");
  // 1/b = conj(b) * w_b / (u_b^2 - D v_b^2)
  Poly n = sub(mul(b.u_, b.u_), mul(b.D_, mul(b.v_, b.v_)));
  QuadExt binv(mul(b.u_, b.w_), neg(mul(b.v_, b.w_)), n, b.D_);
  return mul(a, binv);
}

LaurentSeries QuadExt::to_series(int prec) const {
  int work = prec + w_.degree() + 2;
  LaurentSeries acc = LaurentSeries::from_poly(u_, work);
  if (!v_.is_zero()) {
    LaurentSeries root =
        sqrt(LaurentSeries::from_poly(D_, work + D_.degree() / 2 + v_.degree()));
    acc = add(acc, mul_poly(root, v_));
  }
  LaurentSeries out = div_poly(acc, w_);
  return out.truncated(std::min(out.prec(), prec));
}

int QuadExt::valuation() const {
  if (is_zero()) throw DomainError("valuation of zero");
  if (v_.is_zero()) return w_.degree() - u_.degree();
  // v(u + v sqrt(D)) is exact once the series certifies a leading term; the
  // norm identity bounds how deep cancellation can go, which caps the
  // precision needed.
  int m = u_.is_zero() ? (-v_.degree() - D_.degree() / 2)
                       : std::min(-u_.degree(), -v_.degree() - D_.degree() / 2);
  Poly norm_poly = sub(mul(u_, u_), mul(D_, mul(v_, v_)));
  if (norm_poly.is_zero())
    throw DomainError("radicand is a perfect square; not a field");
  int cap = (-norm_poly.degree()) - m + 2;
  int prec = std::max({m + 4, cap, 1});
  QuadExt numerator(u_, v_, Poly::constant(u_.field(), 1), D_);
  LaurentSeries ser = numerator.to_series(prec);
  if (ser.is_zero_to_prec())
    throw VerificationError("quadratic-extension valuation not certified at computed cap");
  return ser.lead_exp() + w_.degree();
}

namespace {

// Divided Taylor coefficient g_i with f(x + h) = sum_i g_i(x) h^i; the
// binomial-weighted coefficients stay defined in small characteristic.
XPoly taylor_coefficient(const XPoly& f, int i) {
  const auto& fld = f.field();
  std::vector<Poly> out;
  for (int k = i; k <= f.degree(); ++k) {
    // C(k, i) mod p by the multiplicative recurrence.
    u64 binom = 1;
    for (int t = 1; t <= i; ++t)
      binom = binom * static_cast<u64>(k - i + t) / static_cast<u64>(t);
    out.push_back(scalar_mul(f.coeff(k),
                             fld.reduce(static_cast<i64>(binom % fld.p()))));
  }
  return XPoly(fld, std::move(out));
}

// A Newton step from x contracts when every higher Taylor term of
// f(x - f/f') lands strictly above the current residual valuation.
bool newton_contracts(const XPoly& f, const LaurentSeries& x, int rv, int sv) {
  if (!(rv > 2 * sv)) return false;
  int beta = rv - sv;  // valuation of the step
  for (int i = 2; i <= f.degree(); ++i) {
    LaurentSeries gi = taylor_coefficient(f, i).eval(x);
    if (gi.val_lower_bound() + i * beta <= rv) return false;
  }
  return true;
}

}  // namespace

HenselResult hensel_root(const XPoly& f, const LaurentSeries& x0,
                         int target_prec) {
  XPoly fd = f.derivative();
  if (fd.is_zero()) throw DomainError("Newton iteration needs a nonzero derivative");

  // All data except x0 is exact; re-embed the current approximation at a
  // widening precision so refinement is never starved.
  int work = std::max(x0.prec(), target_prec + 8);
  LaurentSeries x = x0;
  if (x.prec() < work) {
    if (x.is_zero_to_prec())
      x = LaurentSeries::zero_to(x.field(), work);
    else
      x = LaurentSeries::from_terms(x.field(), x.lead_exp(), x.raw_coeffs(),
                                    work);
  }

  LaurentSeries fx = f.eval(x);
  LaurentSeries fdx = fd.eval(x);
  if (fdx.is_zero_to_prec())
    throw DomainError("derivative vanishes to precision at the starting point");
  int rv = fx.val_lower_bound();
  int sv = fdx.lead_exp();
  if (fx.is_zero_to_prec() && rv >= target_prec) return {x, rv};
  if (!(rv > 2 * sv))
    throw DomainError("Newton condition |f(x0)| < |f'(x0)|^2 fails: v(f)=" +
                      std::to_string(rv) + ", v(f')=" + std::to_string(sv));
  if (!newton_contracts(f, x, rv, sv))
    throw DomainError(
        "Newton step does not contract: a higher-order term of the update "
        "reaches the residual valuation");

  for (int iter = 0; iter < 64; ++iter) {
    LaurentSeries step = div(fx, fdx);
    x = sub(x, step);
    if (x.prec() < work) {
      // The true root agrees with x beyond the certified window; extending
      // with zeros only perturbs f(x) above the current residual valuation.
      if (x.is_zero_to_prec())
        x = LaurentSeries::zero_to(x.field(), work);
      else
        x = LaurentSeries::from_terms(x.field(), x.lead_exp(), x.raw_coeffs(),
                                      work);
    }
    fx = f.eval(x);
    int new_rv = fx.val_lower_bound();
    if (new_rv >= target_prec) return {x, new_rv};
    if (new_rv <= rv)
      throw PrecisionError("Newton iteration stalled at residual valuation " +
                           std::to_string(new_rv));
    rv = new_rv;
    fdx = fd.eval(x);
    if (fdx.is_zero_to_prec())
      throw DomainError("derivative vanished during Newton iteration");
  }
  throw PrecisionError("Newton iteration did not reach the target valuation");
}

std::optional<LaurentSeries> find_newton_seed(const XPoly& f) {
  const auto& fld = f.field();
  const int probe_prec = 12;
  auto admissible = [&](const LaurentSeries& cand) {
    LaurentSeries fx = f.eval(cand);
    LaurentSeries fdx = f.derivative().eval(cand);
    if (fdx.is_zero_to_prec()) return false;
    if (fx.is_zero_to_prec()) return true;
    return newton_contracts(f, cand, fx.lead_exp(), fdx.lead_exp());
  };
  // One- and two-term prefixes, leading exponent in [-2, 2], deterministic
  // order.
  for (int e1 = -2; e1 <= 2; ++e1) {
    for (u32 c1 = 1; c1 < fld.p(); ++c1) {
      LaurentSeries one = LaurentSeries::monomial(fld, c1, e1, probe_prec);
      if (admissible(one)) return one;
      for (int e2 = e1 + 1; e2 <= e1 + 3; ++e2) {
        for (u32 c2 = 1; c2 < fld.p(); ++c2) {
          std::vector<u32> coeffs(static_cast<std::size_t>(e2 - e1) + 1, 0);
          coeffs.front() = c1;
          coeffs.back() = c2;
          LaurentSeries two =
              LaurentSeries::from_terms(fld, e1, std::move(coeffs), probe_prec);
          if (admissible(two)) return two;
        }
      }
    }
  }
  // The zero prefix last: it covers roots of positive valuation.
  LaurentSeries z = LaurentSeries::zero_to(fld, probe_prec);
  if (admissible(z)) return z;
  return std::nullopt;
}

}  // namespace ffda
