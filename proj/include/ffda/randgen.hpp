#pragma once

#include <random>

#include "ffda/algebraic.hpp"
#include "ffda/quadform.hpp"

namespace ffda {

/// Deterministic generator for randomized suites.  Draws reduce by modulo
/// so a fixed seed reproduces the same stream everywhere.
class Rng {
public:
  explicit Rng(u64 seed) : eng_(seed) {}

  u64 next(u64 bound) { return bound ? eng_() % bound : 0; }
  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(next(static_cast<u64>(hi - lo + 1)));
  }
  bool chance(int num, int den) { return next(static_cast<u64>(den)) <
                                         static_cast<u64>(num); }

private:
  std::mt19937_64 eng_;
};

Poly random_poly(Rng& rng, const FieldConfig& field, int max_deg,
                 bool nonzero = false);
Poly random_poly_of_degree(Rng& rng, const FieldConfig& field, int deg);

/// Surd with even-degree non-square radicand whose root lies in the series
/// field; degrees kept small enough for exhaustive cross-checks.
QuadraticSurd random_surd(Rng& rng, const FieldConfig& field, int max_d_deg);

/// Integral form with non-square discriminant splitting in the series
/// field; disc degree at most max_disc_deg.
BinaryQuadraticForm random_form(Rng& rng, const FieldConfig& field,
                                int max_disc_deg);

/// Series with random certified coefficients, leading exponent in
/// [lead_lo, lead_hi].
LaurentSeries random_series(Rng& rng, const FieldConfig& field, int lead_lo,
                            int lead_hi, int prec);

}  // namespace ffda
