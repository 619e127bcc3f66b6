#include "ffda/laurent.hpp"

#include <algorithm>
#include <numeric>

namespace ffda {

ExpRational::ExpRational(i64 n, i64 d) : num(n), den(d) {
  if (den == 0) throw DomainError("exponent rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i64 g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

void LaurentSeries::normalize() {
  for (auto& c : coeffs_) c %= field_.p();
  std::size_t skip = 0;
  while (skip < coeffs_.size() && coeffs_[skip] == 0) ++skip;
  if (skip) {
    coeffs_.erase(coeffs_.begin(),
                  coeffs_.begin() + static_cast<std::ptrdiff_t>(skip));
    lead_ += static_cast<int>(skip);
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) {
    lead_ = prec_;
    return;
  }
  // Stored range must stay inside the certified window.
  if (lead_ >= prec_)
    throw PrecisionError("leading exponent " + std::to_string(lead_) +
                         " is not below the certified precision " +
                         std::to_string(prec_));
  if (lead_ + static_cast<int>(coeffs_.size()) > prec_)
    coeffs_.resize(static_cast<std::size_t>(prec_ - lead_));
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) lead_ = prec_;
}

LaurentSeries LaurentSeries::zero_to(FieldConfig field, int prec) {
  return LaurentSeries(field, prec, {}, prec);
}

LaurentSeries LaurentSeries::from_poly(const Poly& p, int prec) {
  if (p.is_zero()) return zero_to(p.field(), prec);
  int lead = -p.degree();
  if (prec <= lead)
    throw PrecisionError("precision " + std::to_string(prec) +
                         " cannot represent a polynomial of degree " +
                         std::to_string(p.degree()));
  std::vector<u32> coeffs(p.coeffs().rbegin(), p.coeffs().rend());
  return LaurentSeries(p.field(), lead, std::move(coeffs), prec);
}

LaurentSeries LaurentSeries::from_terms(FieldConfig field, int lead,
                                        std::vector<u32> coeffs, int prec) {
  return LaurentSeries(field, lead, std::move(coeffs), prec);
}

LaurentSeries LaurentSeries::monomial(FieldConfig field, i64 c, int e,
                                      int prec) {
  if (prec <= e) throw PrecisionError("monomial exponent above precision");
  return LaurentSeries(field, e, {field.reduce(c)}, prec);
}

LaurentSeries LaurentSeries::from_rational(const RationalFn& r, int prec) {
  const auto& f = r.field();
  if (r.is_zero()) return zero_to(f, prec);
  const Poly& num = r.num();
  const Poly& den = r.den();
  int v0 = den.degree() - num.degree();
  int terms = prec - v0;
  if (terms <= 0) return zero_to(f, prec);
  // Divide the degree-reversed coefficient sequences as power series.
  auto num_at = [&](int t) { return num.coeff(num.degree() - t); };
  auto den_at = [&](int t) { return den.coeff(den.degree() - t); };
  u32 b0_inv = f.inv(den.leading());
  std::vector<u32> c(static_cast<std::size_t>(terms), 0);
  for (int t = 0; t < terms; ++t) {
    u32 acc = num_at(t);
    for (int s = 1; s <= t; ++s)
      acc = f.sub(acc, f.mul(den_at(s), c[static_cast<std::size_t>(t - s)]));
    c[static_cast<std::size_t>(t)] = f.mul(acc, b0_inv);
  }
  return LaurentSeries(f, v0, std::move(c), prec);
}

LaurentSeries LaurentSeries::truncated(int new_prec) const {
  assert(new_prec <= prec_);
  if (coeffs_.empty() || new_prec <= lead_)
    return zero_to(field_, new_prec);
  std::vector<u32> c(coeffs_);
  if (lead_ + static_cast<int>(c.size()) > new_prec)
    c.resize(static_cast<std::size_t>(new_prec - lead_));
  return LaurentSeries(field_, lead_, std::move(c), new_prec);
}

std::string LaurentSeries::to_string() const {
  std::string out = "ser:" + std::to_string(val_lower_bound()) + ":";
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(coeffs_[j]);
  }
  if (coeffs_.empty()) out += '0';
  out += '@';
  out += std::to_string(prec_);
  return out;
}

namespace {

void check_same_field(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.field() != b.field())
    throw DomainError("mixed field configurations in series arithmetic");
}

}  // namespace

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) {
  check_same_field(a, b);
  const auto& f = a.field();
  int prec = std::min(a.prec(), b.prec());
  int lo = std::min(a.val_lower_bound(), b.val_lower_bound());
  if (lo >= prec) return LaurentSeries::zero_to(f, prec);
  std::vector<u32> c(static_cast<std::size_t>(prec - lo), 0);
  for (int e = lo; e < prec; ++e)
    c[static_cast<std::size_t>(e - lo)] = f.add(a.coeff(e), b.coeff(e));
  return LaurentSeries::from_terms(f, lo, std::move(c), prec);
}

LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b) {
  return add(a, neg(b));
}

LaurentSeries neg(const LaurentSeries& a) {
  const auto& f = a.field();
  if (a.is_zero_to_prec()) return a;
  std::vector<u32> c(a.raw_coeffs());
  for (auto& x : c) x = f.neg(x);
  return LaurentSeries::from_terms(f, a.lead_exp(), std::move(c), a.prec());
}

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) {
  check_same_field(a, b);
  const auto& f = a.field();
  int prec = std::min(a.prec() + b.val_lower_bound(),
                      b.prec() + a.val_lower_bound());
  if (a.is_zero_to_prec() || b.is_zero_to_prec())
    return LaurentSeries::zero_to(f, prec);
  int lo = a.lead_exp() + b.lead_exp();
  if (lo >= prec) return LaurentSeries::zero_to(f, prec);
  std::vector<u32> c(static_cast<std::size_t>(prec - lo), 0);
  int na = static_cast<int>(a.raw_coeffs().size());
  int nb = static_cast<int>(b.raw_coeffs().size());
  for (int i = 0; i < na; ++i) {
    u32 ai = a.raw_coeffs()[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    for (int j = 0; j < nb; ++j) {
      int e = i + j;
      if (lo + e >= prec) break;
      auto idx = static_cast<std::size_t>(e);
      c[idx] = f.add(c[idx], f.mul(ai, b.raw_coeffs()[static_cast<std::size_t>(j)]));
    }
  }
  return LaurentSeries::from_terms(f, lo, std::move(c), prec);
}

LaurentSeries scalar_mul(const LaurentSeries& a, u32 c) {
  const auto& f = a.field();
  c %= f.p();
  if (c == 0) return LaurentSeries::zero_to(f, a.prec());
  std::vector<u32> out(a.raw_coeffs());
  for (auto& x : out) x = f.mul(x, c);
  if (a.is_zero_to_prec()) return a;
  return LaurentSeries::from_terms(f, a.lead_exp(), std::move(out), a.prec());
}

LaurentSeries mul_poly(const LaurentSeries& a, const Poly& b) {
  if (a.field() != b.field())
    throw DomainError("mixed field configurations in series arithmetic");
  if (b.is_zero()) return LaurentSeries::zero_to(a.field(), a.prec());
  if (a.is_zero_to_prec())
    return LaurentSeries::zero_to(a.field(), a.prec() - b.degree());
  // b is exact, so only its valuation shifts the certified window.  Embed it
  // with enough precision that the product rule bottoms out at prec_a + v(b).
  return mul(a, LaurentSeries::from_poly(b, a.prec() - a.val_lower_bound() -
                                                b.degree()));
}

LaurentSeries add_poly(const LaurentSeries& a, const Poly& b) {
  if (b.is_zero()) return a;
  return add(a, LaurentSeries::from_poly(b, a.prec()));
}

LaurentSeries sub_from_poly(const Poly& b, const LaurentSeries& a) {
  return add_poly(neg(a), b);
}

LaurentSeries shift_exp(const LaurentSeries& a, int k) {
  if (a.is_zero_to_prec())
    return LaurentSeries::zero_to(a.field(), a.prec() + k);
  return LaurentSeries::from_terms(a.field(), a.lead_exp() + k, a.raw_coeffs(),
                                   a.prec() + k);
}

LaurentSeries inv(const LaurentSeries& a) {
  const auto& f = a.field();
  if (a.is_zero_to_prec())
    throw DomainError("inverse of a series that is zero to its precision");
  int n = a.lead_exp();
  int terms = a.prec() - n;  // certified coefficients of a
  u32 a0_inv = f.inv(a.raw_coeffs()[0]);
  std::vector<u32> c(static_cast<std::size_t>(terms), 0);
  c[0] = a0_inv;
  auto a_rel = [&](int t) { return a.coeff(n + t); };
  for (int t = 1; t < terms; ++t) {
    u32 acc = 0;
    for (int s = 1; s <= t; ++s)
      acc = f.add(acc, f.mul(a_rel(s), c[static_cast<std::size_t>(t - s)]));
    c[static_cast<std::size_t>(t)] = f.mul(f.neg(acc), a0_inv);
  }
  return LaurentSeries::from_terms(f, -n, std::move(c), a.prec() - 2 * n);
}

LaurentSeries div(const LaurentSeries& a, const LaurentSeries& b) {
  return mul(a, inv(b));
}

LaurentSeries div_poly(const LaurentSeries& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("series division by the zero polynomial");
  const auto& f = a.field();
  int prec = a.prec() + b.degree();
  if (a.is_zero_to_prec()) return LaurentSeries::zero_to(f, prec);
  int lo = a.lead_exp() + b.degree();
  int terms = prec - lo;
  u32 lead_inv = f.inv(b.leading());
  auto b_rel = [&](int t) { return b.coeff(b.degree() - t); };
  std::vector<u32> c(static_cast<std::size_t>(terms), 0);
  for (int t = 0; t < terms; ++t) {
    u32 acc = a.coeff(a.lead_exp() + t);
    for (int s = 1; s <= t; ++s)
      acc = f.sub(acc, f.mul(b_rel(s), c[static_cast<std::size_t>(t - s)]));
    c[static_cast<std::size_t>(t)] = f.mul(acc, lead_inv);
  }
  return LaurentSeries::from_terms(f, lo, std::move(c), prec);
}

LaurentSeries sqrt(const LaurentSeries& a) {
  const auto& f = a.field();
  if (f.p() == 2) throw DomainError("series square root requires p > 2");
  if (a.is_zero_to_prec())
    throw DomainError("square root of a series that is zero to its precision");
  int v = a.lead_exp();
  if (v % 2 != 0)
    throw DomainError("square root of a series with odd valuation " +
                      std::to_string(v));
  auto s0 = f.sqrt(a.raw_coeffs()[0]);
  if (!s0)
    throw DomainError("leading coefficient " +
                      std::to_string(a.raw_coeffs()[0]) +
                      " is not a quadratic residue mod " +
                      std::to_string(f.p()));
  int w = v / 2;
  int terms = a.prec() - 2 * w;  // derivable coefficients of the root
  std::vector<u32> y(static_cast<std::size_t>(terms), 0);
  y[0] = *s0;
  u32 half = f.inv(f.mul(2, *s0));
  for (int t = 1; t < terms; ++t) {
    u32 acc = 0;
    for (int i = 1; i < t; ++i)
      acc = f.add(acc, f.mul(y[static_cast<std::size_t>(i)],
                             y[static_cast<std::size_t>(t - i)]));
    u32 target = f.sub(a.coeff(v + t), acc);
    y[static_cast<std::size_t>(t)] = f.mul(target, half);
  }
  return LaurentSeries::from_terms(f, w, std::move(y), a.prec() - w);
}

Poly integral_part(const LaurentSeries& a) {
  if (a.prec() < 1)
    throw PrecisionError(
        "integral part needs all coefficients at exponents <= 0; precision "
        "is " +
        std::to_string(a.prec()));
  const auto& f = a.field();
  if (a.is_zero_to_prec() || a.lead_exp() > 0) return Poly::zero(f);
  std::vector<u32> c(static_cast<std::size_t>(-a.lead_exp()) + 1, 0);
  for (int e = a.lead_exp(); e <= 0; ++e)
    c[static_cast<std::size_t>(-e)] = a.coeff(e);
  return Poly(f, std::move(c));
}

LaurentSeries frac_part(const LaurentSeries& a) {
  if (a.prec() < 1)
    throw PrecisionError("fractional part needs precision >= 1, have " +
                         std::to_string(a.prec()));
  const auto& f = a.field();
  if (a.is_zero_to_prec()) return a;
  int lo = std::max(a.lead_exp(), 1);
  if (lo >= a.prec()) return LaurentSeries::zero_to(f, a.prec());
  std::vector<u32> c(static_cast<std::size_t>(a.prec() - lo), 0);
  for (int e = lo; e < a.prec(); ++e)
    c[static_cast<std::size_t>(e - lo)] = a.coeff(e);
  return LaurentSeries::from_terms(f, lo, std::move(c), a.prec());
}

QExponent frac_norm(const LaurentSeries& a) { return frac_part(a).abs(); }

Trilean is_polynomial(const LaurentSeries& a) {
  if (a.prec() < 1) return Trilean::unknown;
  LaurentSeries fp = frac_part(a);
  if (!fp.is_zero_to_prec()) return Trilean::no;
  // All certified fractional coefficients vanish; the tail is unknowable.
  return Trilean::unknown;
}

bool agree_below(const LaurentSeries& a, const LaurentSeries& b, int n) {
  if (a.prec() < n || b.prec() < n)
    throw PrecisionError("agree_below needs both precisions >= bound");
  int lo = std::min(a.val_lower_bound(), b.val_lower_bound());
  for (int e = lo; e < n; ++e)
    if (a.coeff(e) != b.coeff(e)) return false;
  return true;
}

}  // namespace ffda
