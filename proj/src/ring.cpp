#include "ffda/ring.hpp"

#include <algorithm>
#include <limits>

namespace ffda {

Poly Poly::constant(FieldConfig field, i64 c) {
  return Poly(field, {field.reduce(c)});
}

Poly Poly::monomial(FieldConfig field, i64 c, int k) {
  assert(k >= 0);
  std::vector<u32> v(static_cast<std::size_t>(k) + 1, 0);
  v.back() = field.reduce(c);
  return Poly(field, std::move(v));
}

std::string Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    u32 c = coeff(i);
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) {
        out += std::to_string(c);
        out += '*';
      }
      out += 'T';
      if (i != 1) {
        out += '^';
        out += std::to_string(i);
      }
    }
  }
  return out;
}

namespace {

void check_same_field(const Poly& a, const Poly& b) {
  if (a.field() != b.field())
    throw DomainError("mixed field configurations in polynomial arithmetic");
}

}  // namespace

Poly add(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  const auto& f = a.field();
  std::vector<u32> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = f.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return Poly(f, std::move(out));
}

Poly sub(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  const auto& f = a.field();
  std::vector<u32> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = f.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return Poly(f, std::move(out));
}

Poly neg(const Poly& a) {
  const auto& f = a.field();
  std::vector<u32> out(a.coeffs());
  for (auto& c : out) c = f.neg(c);
  return Poly(f, std::move(out));
}

Poly mul(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  const auto& f = a.field();
  if (a.is_zero() || b.is_zero()) return Poly::zero(f);
  std::vector<u32> out(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    u32 ai = a.coeffs()[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      out[i + j] = f.add(out[i + j], f.mul(ai, b.coeffs()[j]));
  }
  return Poly(f, std::move(out));
}

Poly scalar_mul(const Poly& a, u32 c) {
  const auto& f = a.field();
  std::vector<u32> out(a.coeffs());
  for (auto& x : out) x = f.mul(x, c);
  return Poly(f, std::move(out));
}

DivModResult divmod(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  const auto& f = a.field();
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero() || a.coeffs().size() < b.coeffs().size())
    return {Poly::zero(f), a};
  std::vector<u32> rem(a.coeffs());
  int db = b.degree();
  u32 lead_inv = f.inv(b.leading());
  std::vector<u32> quot(rem.size() - static_cast<std::size_t>(db), 0);
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    u32 c = rem[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    u32 qc = f.mul(c, lead_inv);
    quot[static_cast<std::size_t>(i - db)] = qc;
    for (int j = 0; j <= db; ++j) {
      auto idx = static_cast<std::size_t>(i - db + j);
      rem[idx] = f.sub(rem[idx], f.mul(qc, b.coeff(j)));
    }
  }
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).rem;
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return scalar_mul(x, x.field().inv(x.leading()));
}

ExtGcdResult ext_gcd(const Poly& a, const Poly& b) {
  check_same_field(a, b);
  const auto& f = a.field();
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::constant(f, 1), u1 = Poly::zero(f);
  Poly v0 = Poly::zero(f), v1 = Poly::constant(f, 1);
  while (!r1.is_zero()) {
    auto qr = divmod(r0, r1);
    Poly r2 = qr.rem;
    Poly u2 = sub(u0, mul(qr.quot, u1));
    Poly v2 = sub(v0, mul(qr.quot, v1));
    r0 = r1; r1 = r2;
    u0 = u1; u1 = u2;
    v0 = v1; v1 = v2;
  }
  if (r0.is_zero()) return {r0, u0, v0};
  u32 s = f.inv(r0.leading());
  return {scalar_mul(r0, s), scalar_mul(u0, s), scalar_mul(v0, s)};
}

std::optional<Poly> is_square(const Poly& a) {
  const auto& f = a.field();
  if (f.p() == 2) throw DomainError("is_square requires p > 2");
  if (a.is_zero()) return Poly::zero(f);
  int d = a.degree();
  if (d % 2 != 0) return std::nullopt;
  auto lead_root = f.sqrt(a.leading());
  if (!lead_root) return std::nullopt;
  int m = d / 2;
  std::vector<u32> s(static_cast<std::size_t>(m) + 1, 0);
  s[static_cast<std::size_t>(m)] = *lead_root;
  u32 half = f.inv(f.mul(2, *lead_root));
  // Match coefficients of T^(m+k) downward; each step pins s[k].
  for (int k = m - 1; k >= 0; --k) {
    u32 acc = 0;
    for (int i = k + 1; i <= m; ++i) {
      int j = m + k - i;
      if (j > m || j <= k) continue;
      acc = f.add(acc, f.mul(s[static_cast<std::size_t>(i)],
                             s[static_cast<std::size_t>(j)]));
    }
    u32 target = f.sub(a.coeff(m + k), acc);
    s[static_cast<std::size_t>(k)] = f.mul(target, half);
  }
  Poly root(f, std::move(s));
  if (mul(root, root) != a) return std::nullopt;
  // Leading coefficient already canonical via FieldConfig::sqrt.
  return root;
}

u64 poly_count(const FieldConfig& field, int max_deg) {
  assert(max_deg >= 0);
  u64 n = 1;
  for (int i = 0; i <= max_deg; ++i) {
    if (n > std::numeric_limits<u64>::max() / field.q())
      throw DomainError("enumeration range overflows: q^" +
                        std::to_string(max_deg + 1));
    n *= field.q();
  }
  return n;
}

Poly poly_from_index(const FieldConfig& field, u64 idx) {
  std::vector<u32> coeffs;
  while (idx) {
    coeffs.push_back(static_cast<u32>(idx % field.q()));
    idx /= field.q();
  }
  return Poly(field, std::move(coeffs));
}

Poly monic_poly_of_degree(const FieldConfig& field, int d, u64 idx) {
  std::vector<u32> coeffs(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; i < d && idx; ++i) {
    coeffs[static_cast<std::size_t>(i)] = static_cast<u32>(idx % field.q());
    idx /= field.q();
  }
  assert(idx == 0 && "index out of range for degree");
  coeffs.back() = 1;
  return Poly(field, std::move(coeffs));
}

RationalFn::RationalFn(Poly num, Poly den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.field(), 1);
    return;
  }
  Poly g = gcd(num_, den_);
  if (!g.is_constant() || g.coeff(0) != 1) {
    num_ = divmod(num_, g).quot;
    den_ = divmod(den_, g).quot;
  }
  u32 s = num_.field().inv(den_.leading());
  num_ = scalar_mul(num_, s);
  den_ = scalar_mul(den_, s);
}

RationalFn add(const RationalFn& a, const RationalFn& b) {
  return RationalFn(add(mul(a.num(), b.den()), mul(b.num(), a.den())),
                    mul(a.den(), b.den()));
}

RationalFn sub(const RationalFn& a, const RationalFn& b) {
  return RationalFn(sub(mul(a.num(), b.den()), mul(b.num(), a.den())),
                    mul(a.den(), b.den()));
}

RationalFn mul(const RationalFn& a, const RationalFn& b) {
  return RationalFn(mul(a.num(), b.num()), mul(a.den(), b.den()));
}

RationalFn div(const RationalFn& a, const RationalFn& b) {
  if (b.is_zero()) throw DomainError("division by zero rational function");
  return RationalFn(mul(a.num(), b.den()), mul(a.den(), b.num()));
}

}  // namespace ffda
