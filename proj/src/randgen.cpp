#include "ffda/randgen.hpp"

namespace ffda {

Poly random_poly(Rng& rng, const FieldConfig& field, int max_deg,
                 bool nonzero) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<u32> c(static_cast<std::size_t>(max_deg) + 1);
    for (auto& x : c) x = static_cast<u32>(rng.next(field.q()));
    Poly p(field, std::move(c));
    if (!nonzero || !p.is_zero()) return p;
  }
  return Poly::constant(field, 1);
}

Poly random_poly_of_degree(Rng& rng, const FieldConfig& field, int deg) {
  std::vector<u32> c(static_cast<std::size_t>(deg) + 1);
  for (auto& x : c) x = static_cast<u32>(rng.next(field.q()));
  c.back() = 1 + static_cast<u32>(rng.next(field.q() - 1));
  return Poly(field, std::move(c));
}

QuadraticSurd random_surd(Rng& rng, const FieldConfig& field, int max_d_deg) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    int dd = 2 * rng.range(1, std::max(1, max_d_deg / 2));
    Poly d = random_poly_of_degree(rng, field, dd);
    if (!field.sqrt(d.leading())) continue;
    if (is_square(d)) continue;
    Poly pnum = random_poly(rng, field, std::max(1, dd / 2));
    Poly q = random_poly(rng, field, 1, true);
    int sign = rng.chance(1, 2) ? 1 : -1;
    return QuadraticSurd(pnum, q, d, sign);
  }
  throw DomainError("no surd found within the attempt budget");
}

BinaryQuadraticForm random_form(Rng& rng, const FieldConfig& field,
                                int max_disc_deg) {
  for (int attempt = 0; attempt < 2000; ++attempt) {
    Poly a = random_poly(rng, field, std::max(0, max_disc_deg / 2 - 1), true);
    Poly b = random_poly(rng, field, max_disc_deg / 2);
    Poly c = random_poly(rng, field, std::max(0, max_disc_deg / 2 - 1));
    Poly disc = sub(mul(b, b), scalar_mul(mul(a, c), 4));
    if (disc.is_zero() || disc.degree() % 2 != 0 ||
        disc.degree() > max_disc_deg || disc.degree() < 2)
      continue;
    if (!field.sqrt(disc.leading())) continue;
    if (is_square(disc)) continue;
    return BinaryQuadraticForm(a, b, c);
  }
  throw DomainError("no form found within the attempt budget");
}

LaurentSeries random_series(Rng& rng, const FieldConfig& field, int lead_lo,
                            int lead_hi, int prec) {
  int lead = rng.range(lead_lo, lead_hi);
  if (lead >= prec) lead = prec - 1;
  std::vector<u32> c(static_cast<std::size_t>(prec - lead));
  for (auto& x : c) x = static_cast<u32>(rng.next(field.q()));
  c[0] = 1 + static_cast<u32>(rng.next(field.q() - 1));
  return LaurentSeries::from_terms(field, lead, std::move(c), prec);
}

}  // namespace ffda
