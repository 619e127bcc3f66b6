#pragma once

#include <utility>
#include <vector>

#include "ffda/algebraic.hpp"

namespace ffda {

enum class CFStatusKind {
  complete_rational,    // expansion terminated (to certified precision)
  periodic,             // exact surd engine found a repeated state
  precision_exhausted,  // series engine ran out of certified coefficients
};

struct CFStatus {
  CFStatusKind kind = CFStatusKind::precision_exhausted;
  int preperiod = 0;  // periodic only
  int period = 0;     // periodic only
  int emitted = 0;    // number of certified quotients
};

/// Continued fraction data: quotients a_0, a_1, ... with deg a_j >= 1 for
/// j >= 1, and convergents P_n/Q_n following the standard recurrence
/// P_n = a_n P_{n-1} + P_{n-2}, Q_n = a_n Q_{n-1} + Q_{n-2}.
struct CFExpansion {
  std::vector<Poly> quotients;
  std::vector<std::pair<Poly, Poly>> convergents;
  CFStatus status;
  // Surd engine only: the (P, Q) state before each step, sign folded in.
  std::vector<std::pair<Poly, Poly>> surd_states;
};

/// One complete-quotient step on the state (P + sqrt(D))/Q.
struct SurdStep {
  Poly quotient;
  Poly next_P;
  Poly next_Q;
};

SurdStep complete_quotient_step(const Poly& P, const Poly& Q, const Poly& D);

/// Exact finite expansion of a rational function (Euclidean algorithm).
CFExpansion cf_rational(const RationalFn& r);

/// Certified expansion of a truncated series: quotients are emitted only
/// while the integral part and the residual are certain at the carried
/// precision; otherwise the expansion stops with precision_exhausted.
CFExpansion cf_series(const LaurentSeries& alpha, int max_terms);

/// Exact periodic expansion of a quadratic surd via the complete-quotient
/// recurrence a = [(P + sqrt(D))/Q], P' = aQ - P, Q' = (D - P'^2)/Q;
/// terminates by detecting a repeated (P, Q) state.
CFExpansion cf_surd(const QuadraticSurd& alpha);

/// Quotient at any index; periodic expansions cycle through their period.
Poly cf_quotient(const CFExpansion& exp, int idx);
/// Convergent (P_n, Q_n) at any index reachable through cf_quotient.
std::pair<Poly, Poly> cf_convergent(const CFExpansion& exp, int n);
/// Value of [a_0; a_1, ..., a_n] as an exact rational (equals P_n/Q_n).
RationalFn cf_value(const CFExpansion& exp, int n);

struct QualityReport {
  int n = 0;
  int expected_exp = 0;     // deg a_{n+1} + 2 deg Q_n
  Valuation achieved;       // valuation of alpha - P_n/Q_n
  bool equality = false;    // achieved is exact and equals expected_exp
  bool best_checked = false;
  bool best_ok = false;     // every |Q| < |Q_n| does strictly worse
};

/// Checks the exact distance law |alpha - P_n/Q_n| = 1/(|a_{n+1}| |Q_n|^2)
/// and optionally the best-approximation property by exhaustive search.
QualityReport convergent_quality(const CFExpansion& exp,
                                 const LaurentSeries& alpha_view, int n,
                                 bool check_best = false);

/// Approximation constant of a quadratic surd: q^(-D) where D is the
/// largest partial-quotient degree over one full period.  Exact.
QExponent tau_of_surd(const QuadraticSurd& alpha);

/// Approximation constant read off an expansion: zero for terminated
/// (rational) expansions, q^(-D) for periodic ones.  Throws DomainError on
/// precision-exhausted input: no constant is certified there.
QExponent tau_of_expansion(const CFExpansion& exp);

/// Largest partial-quotient degree over the period of a periodic expansion.
int max_period_quotient_degree(const CFExpansion& exp);

}  // namespace ffda
