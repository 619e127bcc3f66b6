#include "ffda/oracle.hpp"

#include <algorithm>

namespace ffda {

NormValue product_norm(const OracleTheta& theta, const Poly& x) {
  if (theta.exact) {
    const RationalFn& r = *theta.exact;
    Poly rem = divmod(mul(x, r.num()), r.den()).rem;
    if (rem.is_zero()) return {NormValue::Kind::exact_zero, 0};
    return {NormValue::Kind::exact,
            static_cast<i64>(r.den().degree() - rem.degree())};
  }
  LaurentSeries prod = mul_poly(theta.series, x);
  QExponent norm = frac_norm(prod);
  if (norm.is_zero()) return {NormValue::Kind::lower_bound, prod.prec()};
  return {NormValue::Kind::exact, norm.exponent()};
}

namespace {

// Objective value over one candidate: exponent semantics with exact zero as
// the absorbing maximum and lower bounds ordered by their floor.
struct ObjVal {
  NormValue::Kind kind = NormValue::Kind::exact;
  i64 exp = 0;

  bool beats(const ObjVal& o) const {
    if (kind == NormValue::Kind::exact_zero)
      return o.kind != NormValue::Kind::exact_zero;
    if (o.kind == NormValue::Kind::exact_zero) return false;
    return exp > o.exp;
  }
  bool ties(const ObjVal& o) const {
    if (kind == NormValue::Kind::exact_zero)
      return o.kind == NormValue::Kind::exact_zero;
    return o.kind != NormValue::Kind::exact_zero && exp == o.exp;
  }
};

constexpr std::size_t kWitnessCap = 1000;

struct ChunkBest {
  bool any = false;
  ObjVal best;
  bool saw_bound = false;
  std::vector<Poly> witnesses;
  bool truncated = false;

  void offer(const ObjVal& v, const Poly& x) {
    if (v.kind == NormValue::Kind::lower_bound) saw_bound = true;
    if (!any || v.beats(best)) {
      any = true;
      best = v;
      witnesses.assign(1, x);
      truncated = false;
      return;
    }
    if (v.ties(best)) {
      if (witnesses.size() < kWitnessCap)
        witnesses.push_back(x);
      else
        truncated = true;
    }
  }

  void absorb(ChunkBest&& o) {
    if (!o.any) {
      saw_bound = saw_bound || o.saw_bound;
      return;
    }
    if (!any || o.best.beats(best)) {
      any = o.any;
      best = o.best;
      witnesses = std::move(o.witnesses);
      truncated = o.truncated;
    } else if (o.best.ties(best)) {
      for (auto& w : o.witnesses) {
        if (witnesses.size() < kWitnessCap)
          witnesses.push_back(std::move(w));
        else
          truncated = true;
      }
      truncated = truncated || o.truncated;
    }
    saw_bound = saw_bound || o.saw_bound;
  }
};

// Deterministic chunked scan: the index range is cut into a fixed number of
// chunks; chunk results merge in index order whether or not the chunks ran
// in parallel.
template <typename Gen, typename Eval>
ChunkBest scan_range(u64 count, const Gen& gen, const Eval& eval,
                     bool parallel) {
  const int kChunks = 64;
  int chunks = static_cast<int>(std::min<u64>(kChunks, std::max<u64>(count, 1)));
  std::vector<ChunkBest> parts(static_cast<std::size_t>(chunks));
  u64 per = (count + static_cast<u64>(chunks) - 1) / static_cast<u64>(chunks);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
#endif
  for (int c = 0; c < chunks; ++c) {
    u64 lo = static_cast<u64>(c) * per;
    u64 hi = std::min(count, lo + per);
    ChunkBest local;
    for (u64 idx = lo; idx < hi; ++idx) {
      Poly x = gen(idx);
      local.offer(eval(x), x);
    }
    parts[static_cast<std::size_t>(c)] = std::move(local);
  }
  (void)parallel;
  ChunkBest out;
  for (auto& part : parts) out.absorb(std::move(part));
  return out;
}

// max_i ||x theta_i|| as an objective: combine per-form norms by the
// smallest exponent, honoring exactness.
ObjVal combined_norm(const std::vector<OracleTheta>& thetas, const Poly& x) {
  bool have_exact = false, have_bound = false;
  i64 exact_min = 0, bound_min = 0;
  for (const auto& th : thetas) {
    NormValue nv = product_norm(th, x);
    if (nv.kind == NormValue::Kind::exact_zero) continue;  // value 0 never maximal
    if (nv.kind == NormValue::Kind::exact) {
      exact_min = have_exact ? std::min(exact_min, nv.exp) : nv.exp;
      have_exact = true;
    } else {
      bound_min = have_bound ? std::min(bound_min, nv.exp) : nv.exp;
      have_bound = true;
    }
  }
  if (!have_exact && !have_bound) return {NormValue::Kind::exact_zero, 0};
  if (have_exact && (!have_bound || exact_min <= bound_min))
    return {NormValue::Kind::exact, exact_min};
  return {NormValue::Kind::lower_bound, bound_min};
}

DegreeRow row_from(int d, ChunkBest&& b) {
  DegreeRow row;
  row.degree = d;
  row.zero_attained = b.any && b.best.kind == NormValue::Kind::exact_zero;
  row.precision_limited =
      b.saw_bound || (b.any && b.best.kind == NormValue::Kind::lower_bound);
  row.best_exp = b.best.kind == NormValue::Kind::exact_zero ? 0 : b.best.exp;
  row.witnesses = std::move(b.witnesses);
  row.witnesses_truncated = b.truncated;
  return row;
}

}  // namespace

std::vector<DegreeRow> best_simultaneous(
    const std::vector<OracleTheta>& thetas, int max_deg, bool parallel) {
  if (thetas.empty()) throw DomainError("needs at least one target");
  const auto& fld = thetas[0].series.field();
  for (const auto& th : thetas)
    if (!th.exact && th.series.prec() <= max_deg)
      throw PrecisionError("series precision must exceed the search degree");
  std::vector<DegreeRow> rows;
  for (int d = 0; d <= max_deg; ++d) {
    u64 count = poly_count(fld, d) / fld.q();  // monic of exact degree d
    auto gen = [&](u64 idx) { return monic_poly_of_degree(fld, d, idx); };
    auto eval = [&](const Poly& x) { return combined_norm(thetas, x); };
    rows.push_back(row_from(d, scan_range(count, gen, eval, parallel)));
  }
  return rows;
}

LowerBoundReport verify_lower_bound(const std::vector<OracleTheta>& thetas,
                                    int max_deg, bool parallel) {
  LowerBoundReport rep;
  i64 n = static_cast<i64>(thetas.size());
  auto rows = best_simultaneous(thetas, max_deg, parallel);
  rep.positive = true;
  bool any = false;
  for (const auto& row : rows) {
    if (row.zero_attained || row.precision_limited) rep.positive = false;
    ExpRational e(n * row.best_exp - row.degree, n);
    rep.per_degree.emplace_back(row.degree, e);
    if (!any || less(rep.gamma_exp, e)) rep.gamma_exp = e;
    any = true;
  }
  return rep;
}

BEstimate estimate_B(const std::vector<OracleTheta>& thetas,
                     const ExpRational& lambda, int max_deg, bool parallel) {
  if (thetas.empty()) throw DomainError("needs at least one target");
  const auto& fld = thetas[0].series.field();
  for (const auto& th : thetas)
    if (!th.exact && th.series.prec() <= max_deg)
      throw PrecisionError("series precision must exceed the search degree");
  BEstimate out;
  bool any = false;
  for (int d = 0; d <= max_deg; ++d) {
    u64 count = poly_count(fld, d) / fld.q();
    auto gen = [&](u64 idx) { return monic_poly_of_degree(fld, d, idx); };
    auto eval = [&](const Poly& x) -> ObjVal {
      i64 total = 0;
      bool bound = false;
      for (const auto& th : thetas) {
        NormValue nv = product_norm(th, x);
        if (nv.kind == NormValue::Kind::exact_zero)
          return {NormValue::Kind::exact_zero, 0};
        bound = bound || nv.kind == NormValue::Kind::lower_bound;
        total += nv.exp;
      }
      return {bound ? NormValue::Kind::lower_bound : NormValue::Kind::exact,
              total};
    };
    ChunkBest b = scan_range(count, gen, eval, parallel);
    if (b.best.kind == NormValue::Kind::exact_zero) {
      out.exact_zero = true;
      out.windows.emplace_back(d, ExpRational::integer(0));
      continue;
    }
    out.precision_limited = out.precision_limited || b.saw_bound;
    // value = q^{lambda d} prod q^{-exp}: exponent = sum exp - lambda d.
    ExpRational e(b.best.exp * lambda.den - lambda.num * d, lambda.den);
    out.windows.emplace_back(d, e);
    if (!any || less(out.estimate_exp, e)) out.estimate_exp = e;
    any = true;
  }
  if (out.exact_zero) out.estimate_exp = ExpRational::integer(0);
  return out;
}

LaurentSeries extremal_series(const FieldConfig& field, int prec) {
  std::vector<u32> coeffs(static_cast<std::size_t>(std::max(0, prec - 1)), 0);
  for (u64 e = 1; static_cast<i64>(e) < prec; e *= field.p())
    coeffs[static_cast<std::size_t>(e - 1)] = 1;
  return LaurentSeries::from_terms(field, 1, std::move(coeffs), prec);
}

ExtremalWitnessReport extremal_witnesses(const FieldConfig& field, int max_deg,
                                         int prec, bool parallel) {
  if (prec < static_cast<int>(field.p()) * max_deg + 2)
    throw PrecisionError("needs precision >= p * max_deg + 2");
  LaurentSeries alpha = extremal_series(field, prec);
  OracleTheta theta = OracleTheta::from_series(alpha);
  ExtremalWitnessReport rep;
  rep.max_deg = max_deg;
  // All nonzero Q, not only monic: units scale the witness list, not the
  // achieved exponent.
  u64 count = poly_count(field, max_deg);
  auto gen = [&](u64 idx) { return poly_from_index(field, idx + 1); };
  auto eval = [&](const Poly& x) -> ObjVal {
    NormValue nv = product_norm(theta, x);
    bool hit = nv.kind == NormValue::Kind::exact &&
               nv.exp == static_cast<i64>(field.p() - 1) * x.degree();
    return {NormValue::Kind::exact, hit ? 1 : 0};
  };
  ChunkBest b = scan_range(count - 1, gen, eval, parallel);
  if (b.any && b.best.exp == 1) rep.witnesses = std::move(b.witnesses);
  return rep;
}

u64 poly_count_of_degree(const FieldConfig& field, int d) {
  return poly_count(field, d) - (d > 0 ? poly_count(field, d - 1) : 1);
}

}  // namespace ffda
