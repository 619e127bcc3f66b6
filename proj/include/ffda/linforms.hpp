#pragma once

#include <optional>
#include <vector>

#include "ffda/laurent.hpp"

namespace ffda {

/// Vector of polynomials; a solution is nonzero when some coordinate is.
struct IntegralPoint {
  std::vector<Poly> coords;

  bool is_zero() const {
    for (const auto& c : coords)
      if (!c.is_zero()) return false;
    return true;
  }
};

/// System of valuation inequalities v(L_i(x)) >= r_i over polynomial
/// unknowns x_j with per-variable degree bounds.
///
/// deg_bounds[j] >= 0 bounds deg x_j; the sentinel -1 pins x_j = 0.
/// Solvability requires every entry to satisfy prec >= r_i + d_j: the
/// coefficient extraction below reads exactly that window.
struct GammaInstance {
  std::vector<std::vector<LaurentSeries>> rows;
  std::vector<int> targets;
  std::vector<int> deg_bounds;

  int n() const { return static_cast<int>(rows.size()); }
  int m() const { return static_cast<int>(deg_bounds.size()); }
};

/// Finds a nonzero x with deg x_j <= d_j and v(L_i(x)) >= r_i, or nullopt
/// when none exists within the bounds.  Each constraint expands, writing
/// x_j = sum_k x_jk T^k, into one F_p-linear equation per exponent e from
/// min_j(v(theta_ij) - d_j) up to r_i - 1; the homogeneous system is solved
/// by Gaussian elimination with a fixed pivot order, and the returned kernel
/// vector is the one with free variables set to (1, 0, 0, ...) in the fixed
/// variable order, so the result is deterministic across runs.
std::optional<IntegralPoint> solve_gamma(const GammaInstance& inst);

/// Re-checks a candidate against the instance with independent series
/// arithmetic (not the solver's expanded matrix).
bool verify_gamma(const GammaInstance& inst, const IntegralPoint& x);

/// sum_j row[j] * x_j
LaurentSeries laurent_dot(const std::vector<LaurentSeries>& row,
                          const IntegralPoint& x);

/// Determinant of a square series matrix by elimination with valuation
/// pivoting.  The zero-to-precision case surfaces as a certified-zero
/// series.
LaurentSeries laurent_det(std::vector<std::vector<LaurentSeries>> mat);

/// Inverse of a square series matrix; nullopt when a pivot cannot be
/// certified nonzero at the carried precision.
std::optional<std::vector<std::vector<LaurentSeries>>> laurent_inverse(
    const std::vector<std::vector<LaurentSeries>>& mat);

/// Solution of a one-sided approximation problem, with the per-form
/// fractional norms re-verified after solving.
struct ApproxSolution {
  IntegralPoint x;                    // the principal unknowns only
  int norm_exp = 0;                   // promised: each norm <= q^(-norm_exp)
  int degree_cap = 0;                 // promised: |x_j| <= q^degree_cap
  std::vector<QExponent> achieved;    // per-form achieved norms
  std::vector<int> achieved_prec;     // certification level of each norm
};

/// One form, one unknown: x with ||x theta|| <= q^(-h) and 1 <= |x| < q^h.
/// Requires h >= 1 and theta.prec() >= 2h.
ApproxSolution dirichlet_single(const LaurentSeries& theta, int h);

/// Common denominator for n targets: x with every ||x theta_i|| below
/// q^(-floor(h/n)-1) and 1 <= |x| <= q^h.  Requires h >= 0 and each
/// theta_i.prec() >= floor(h/n) + 1 + h.
ApproxSolution dirichlet_simultaneous(const std::vector<LaurentSeries>& thetas,
                                      int h);

/// Small-value form: nonzero (x_1..x_n) with ||sum x_i theta_i|| below
/// q^(-n(h+1)) and 1 <= max |x_i| <= q^h.
ApproxSolution transpose_form(const std::vector<LaurentSeries>& thetas, int h);

/// n forms in m unknowns: nonzero x with every ||L_i(x)|| below
/// q^(-floor((m h + m - 1)/n) - 1) and 1 <= max |x_j| <= q^h.
ApproxSolution general_linear_forms(
    const std::vector<std::vector<LaurentSeries>>& theta, int h);

/// Per-form budgets: ||L_i(x)|| <= q^(-t_i - 1 - delta_i) and
/// |x_j| <= q^(t_{n+j}), for any balanced split sum t_i = sum t_{n+j} and
/// slack sum delta_i <= m - 1.
ApproxSolution flexible_bounds(
    const std::vector<std::vector<LaurentSeries>>& theta,
    const std::vector<int>& t, const std::vector<int>& delta);

}  // namespace ffda
