#include "ffda/cfrac.hpp"

#include <algorithm>
#include <map>

namespace ffda {

namespace {

struct ConvergentTracker {
  Poly p1, p2, q1, q2;  // P_{n-1}, P_{n-2}, Q_{n-1}, Q_{n-2}

  explicit ConvergentTracker(FieldConfig f)
      : p1(Poly::constant(f, 1)),
        p2(Poly::zero(f)),
        q1(Poly::zero(f)),
        q2(Poly::constant(f, 1)) {}

  std::pair<Poly, Poly> push(const Poly& a) {
    Poly p = add(mul(a, p1), p2);
    Poly q = add(mul(a, q1), q2);
    p2 = p1; p1 = p;
    q2 = q1; q1 = q;
    return {p, q};
  }
};

void emit(CFExpansion& out, ConvergentTracker& conv, const Poly& a) {
  out.quotients.push_back(a);
  out.convergents.push_back(conv.push(a));
  out.status.emitted = static_cast<int>(out.quotients.size());
}

}  // namespace

CFExpansion cf_rational(const RationalFn& r) {
  const auto& f = r.field();
  CFExpansion out;
  ConvergentTracker conv(f);
  Poly num = r.num(), den = r.den();
  while (true) {
    auto qr = divmod(num, den);
    emit(out, conv, qr.quot);
    if (qr.rem.is_zero()) break;
    num = den;
    den = qr.rem;
  }
  out.status.kind = CFStatusKind::complete_rational;
  return out;
}

CFExpansion cf_series(const LaurentSeries& alpha, int max_terms) {
  const auto& f = alpha.field();
  CFExpansion out;
  ConvergentTracker conv(f);
  LaurentSeries a = alpha;
  while (static_cast<int>(out.quotients.size()) < max_terms) {
    if (a.prec() < 1) {
      out.status.kind = CFStatusKind::precision_exhausted;
      return out;
    }
    Poly quot = integral_part(a);
    emit(out, conv, quot);
    LaurentSeries residual = frac_part(a);
    if (residual.is_zero_to_prec()) {
      out.status.kind = CFStatusKind::complete_rational;
      return out;
    }
    a = inv(residual);
  }
  out.status.kind = CFStatusKind::precision_exhausted;
  return out;
}

namespace {

// Integral part of (P + sqrt(D))/Q, computed at self-sizing precision.
Poly surd_state_integral_part(const Poly& P, const Poly& Q, const Poly& D) {
  int v_lb = std::min(P.is_zero() ? 1 : -P.degree(), -D.degree() / 2) +
             Q.degree();
  int prec = std::max(1, -v_lb) + 2;
  QuadExt state(P, Poly::constant(P.field(), 1), Q, D);
  return integral_part(state.to_series(prec));
}

}  // namespace

SurdStep complete_quotient_step(const Poly& P, const Poly& Q, const Poly& D) {
  Poly a = surd_state_integral_part(P, Q, D);
  Poly Pn = sub(mul(a, Q), P);
  auto qr = divmod(sub(D, mul(Pn, Pn)), Q);
  if (!qr.rem.is_zero())
    throw VerificationError("complete-quotient step left a remainder");
  if (qr.quot.is_zero())
    throw VerificationError("complete-quotient step produced zero denominator");
  return {a, Pn, qr.quot};
}

CFExpansion cf_surd(const QuadraticSurd& alpha) {
  const auto& f = alpha.field();
  // Fold the sign into (P, Q): (P - sqrt(D))/Q == (-P + sqrt(D))/(-Q).
  Poly P = alpha.sign() > 0 ? alpha.P() : neg(alpha.P());
  Poly Q = alpha.sign() > 0 ? alpha.Q() : neg(alpha.Q());
  Poly D = alpha.D();

  CFExpansion out;
  ConvergentTracker conv(f);
  std::map<std::pair<std::vector<u32>, std::vector<u32>>, int> seen;
  const int step_cap = 100000;
  for (int step = 0; step < step_cap; ++step) {
    auto key = std::make_pair(P.coeffs(), Q.coeffs());
    auto it = seen.find(key);
    if (it != seen.end()) {
      out.status.kind = CFStatusKind::periodic;
      out.status.preperiod = it->second;
      out.status.period = step - it->second;
      return out;
    }
    seen.emplace(std::move(key), step);
    out.surd_states.emplace_back(P, Q);
    SurdStep s = complete_quotient_step(P, Q, D);
    emit(out, conv, s.quotient);
    P = s.next_P;
    Q = s.next_Q;
  }
  throw VerificationError("no repeated state within the step cap");
}

Poly cf_quotient(const CFExpansion& exp, int idx) {
  int len = static_cast<int>(exp.quotients.size());
  if (idx < len) return exp.quotients[static_cast<std::size_t>(idx)];
  if (exp.status.kind != CFStatusKind::periodic)
    throw DomainError("quotient index beyond a non-periodic expansion");
  int pre = exp.status.preperiod, per = exp.status.period;
  int j = pre + (idx - pre) % per;
  return exp.quotients[static_cast<std::size_t>(j)];
}

std::pair<Poly, Poly> cf_convergent(const CFExpansion& exp, int n) {
  int len = static_cast<int>(exp.convergents.size());
  if (n < len) return exp.convergents[static_cast<std::size_t>(n)];
  const auto& f = exp.quotients.at(0).field();
  ConvergentTracker conv(f);
  std::pair<Poly, Poly> last{Poly::zero(f), Poly::zero(f)};
  for (int k = 0; k <= n; ++k) last = conv.push(cf_quotient(exp, k));
  return last;
}

RationalFn cf_value(const CFExpansion& exp, int n) {
  auto [p, q] = cf_convergent(exp, n);
  return RationalFn(p, q);
}

QualityReport convergent_quality(const CFExpansion& exp,
                                 const LaurentSeries& alpha_view, int n,
                                 bool check_best) {
  QualityReport rep;
  rep.n = n;
  auto [pn, qn] = cf_convergent(exp, n);
  Poly a_next = cf_quotient(exp, n + 1);
  rep.expected_exp = a_next.degree() + 2 * qn.degree();
  if (alpha_view.prec() < rep.expected_exp + 1)
    throw PrecisionError("view precision " + std::to_string(alpha_view.prec()) +
                         " below required " +
                         std::to_string(rep.expected_exp + 1));
  LaurentSeries diff = sub(
      alpha_view, LaurentSeries::from_rational(RationalFn(pn, qn),
                                               alpha_view.prec()));
  rep.achieved = diff.valuation();
  rep.equality = rep.achieved.exact && rep.achieved.value == rep.expected_exp;
  if (check_best) {
    rep.best_checked = true;
    rep.best_ok = true;
    const auto& f = alpha_view.field();
    // Scalar multiples share the distance, so monic denominators suffice.
    for (int d = 0; d < qn.degree() && rep.best_ok; ++d) {
      u64 count = poly_count(f, d) / f.q();  // q^d monic polynomials
      for (u64 idx = 0; idx < count; ++idx) {
        Poly cand = monic_poly_of_degree(f, d, idx);
        QExponent norm = frac_norm(mul_poly(alpha_view, cand));
        // |alpha - P/Q| = ||Q alpha|| / |Q| must stay strictly above the
        // level-n distance.
        if (norm.is_zero() ||
            norm.exponent() + cand.degree() >= rep.expected_exp) {
          rep.best_ok = false;
          break;
        }
      }
    }
  }
  return rep;
}

int max_period_quotient_degree(const CFExpansion& exp) {
  if (exp.status.kind != CFStatusKind::periodic)
    throw DomainError("expansion has no period");
  int best = 0;
  for (int k = exp.status.preperiod;
       k < exp.status.preperiod + exp.status.period; ++k) {
    const Poly& a = exp.quotients[static_cast<std::size_t>(k)];
    best = std::max(best, a.degree());
  }
  return best;
}

QExponent tau_of_surd(const QuadraticSurd& alpha) {
  return QExponent::finite(max_period_quotient_degree(cf_surd(alpha)));
}

QExponent tau_of_expansion(const CFExpansion& exp) {
  switch (exp.status.kind) {
    case CFStatusKind::complete_rational:
      return QExponent::make_zero();
    case CFStatusKind::periodic:
      return QExponent::finite(max_period_quotient_degree(exp));
    case CFStatusKind::precision_exhausted:
      throw DomainError("approximation constant of an uncertified expansion");
  }
  throw DomainError("unreachable");
}

}  // namespace ffda
