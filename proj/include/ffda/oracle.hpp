#pragma once

#include <optional>
#include <vector>

#include "ffda/laurent.hpp"

namespace ffda {

/// Approximation target for exhaustive searches.  When the element is known
/// exactly as a rational function, norms are computed by polynomial
/// remainder arithmetic and zero is decidable; otherwise the truncated
/// series is used and a vanishing norm is only a precision-level bound.
struct OracleTheta {
  LaurentSeries series;
  std::optional<RationalFn> exact;

  static OracleTheta from_series(LaurentSeries s) {
    return {std::move(s), std::nullopt};
  }
  static OracleTheta from_rational(const RationalFn& r, int prec) {
    return {LaurentSeries::from_rational(r, prec), r};
  }
};

/// ||x * theta|| as exact data.
struct NormValue {
  enum class Kind { exact_zero, lower_bound, exact };
  Kind kind = Kind::exact;
  i64 exp = 0;  // exact exponent, or certified lower bound
};

NormValue product_norm(const OracleTheta& theta, const Poly& x);

/// One table row: the best objective over monic polynomials of one exact
/// degree, with every witness attaining it (in enumeration order).
struct DegreeRow {
  int degree = 0;
  bool zero_attained = false;      // objective hit an exact zero value
  bool precision_limited = false;  // some candidate was only bounded
  i64 best_exp = 0;                // max objective exponent over candidates
  std::vector<Poly> witnesses;
  bool witnesses_truncated = false;
};

/// Per-degree minima of max_i ||x theta_i|| over monic x of exact degree d,
/// for d = 0..max_deg.  Deterministic regardless of parallel execution:
/// the range is cut into fixed chunks whose partial results merge in order.
std::vector<DegreeRow> best_simultaneous(
    const std::vector<OracleTheta>& thetas, int max_deg, bool parallel = true);

/// Empirical lower-bound constant: per degree d the largest e_d with
/// (max_i ||x theta_i||) |x|^(1/n) >= q^(-e_d) over all x of degree d, as
/// the exact rational best_exp - d/n.  gamma = q^(-max_d e_d).
struct LowerBoundReport {
  std::vector<std::pair<int, ExpRational>> per_degree;  // (d, e_d)
  ExpRational gamma_exp;  // empirical gamma = q^(-gamma_exp)
  bool positive = false;  // no zero and no precision-limited row
};

LowerBoundReport verify_lower_bound(const std::vector<OracleTheta>& thetas,
                                    int max_deg, bool parallel = true);

/// Finite-horizon estimate of the degree-lambda product minimum
/// min |x|^lambda prod_j ||x theta_j||, one window per exact degree.
/// Explicitly an estimate: the true quantity is a limit.
struct BEstimate {
  bool exact_zero = false;  // some product vanished exactly
  bool precision_limited = false;
  std::vector<std::pair<int, ExpRational>> windows;  // (d, exponent)
  ExpRational estimate_exp;  // min over windows, as q^(-estimate_exp)
};

BEstimate estimate_B(const std::vector<OracleTheta>& thetas,
                     const ExpRational& lambda, int max_deg,
                     bool parallel = true);

/// T^(-1) + T^(-p) + T^(-p^2) + ... truncated at the stated precision.
LaurentSeries extremal_series(const FieldConfig& field, int prec);

/// All nonzero Q of degree <= max_deg with exponent(||Q alpha||) exactly
/// (p-1) deg Q against the extremal series.  Requires
/// prec >= p * max_deg + 2.
struct ExtremalWitnessReport {
  std::vector<Poly> witnesses;
  int max_deg = 0;
};

ExtremalWitnessReport extremal_witnesses(const FieldConfig& field, int max_deg,
                                         int prec, bool parallel = true);

/// Count of polynomials of degree exactly d: (q - 1) q^d.
u64 poly_count_of_degree(const FieldConfig& field, int d);

}  // namespace ffda
