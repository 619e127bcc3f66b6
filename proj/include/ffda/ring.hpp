#pragma once

#include <cassert>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffda/fp.hpp"

namespace ffda {

/// Element of the polynomial ring F_p[T].
///
/// Canonical form: coeffs[i] is the coefficient of T^i, the leading
/// coefficient is nonzero, and the zero polynomial is the empty vector.
/// The degree of zero is "minus infinity"; it is never encoded as an
/// integer; callers branch on is_zero() instead.
class Poly {
public:
  explicit Poly(FieldConfig field) : field_(field) {}
  Poly(FieldConfig field, std::vector<u32> coeffs)
      : field_(field), coeffs_(std::move(coeffs)) {
    normalize();
  }

  static Poly zero(FieldConfig field) { return Poly(field); }
  static Poly constant(FieldConfig field, i64 c);
  /// c * T^k
  static Poly monomial(FieldConfig field, i64 c, int k);

  const FieldConfig& field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Degree; requires a nonzero polynomial.
  int degree() const {
    assert(!coeffs_.empty() && "degree of the zero polynomial");
    return static_cast<int>(coeffs_.size()) - 1;
  }
  u32 leading() const {
    assert(!coeffs_.empty());
    return coeffs_.back();
  }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  u32 coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
  }
  const std::vector<u32>& coeffs() const { return coeffs_; }

  bool operator==(const Poly& o) const {
    return field_ == o.field_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  /// Lexicographic on (size, coefficients); used for deterministic maps.
  bool operator<(const Poly& o) const {
    if (coeffs_.size() != o.coeffs_.size())
      return coeffs_.size() < o.coeffs_.size();
    return coeffs_ < o.coeffs_;
  }

  std::string to_string() const;

private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() % field_.p() == 0)
      coeffs_.pop_back();
    for (auto& c : coeffs_) c %= field_.p();
  }

  FieldConfig field_;
  std::vector<u32> coeffs_;
};

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly mul(const Poly& a, const Poly& b);
Poly scalar_mul(const Poly& a, u32 c);

struct DivModResult {
  Poly quot;
  Poly rem;
};

/// Exact division with remainder: a = quot*b + rem, deg rem < deg b.
/// Throws DomainError when b is zero.
DivModResult divmod(const Poly& a, const Poly& b);

/// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

struct ExtGcdResult {
  Poly g;  // monic or zero
  Poly u;
  Poly v;  // u*a + v*b == g
};

ExtGcdResult ext_gcd(const Poly& a, const Poly& b);

/// s with s*s == a, when a is a perfect square; the branch is fixed by
/// requiring the leading coefficient of s to have integer representative in
/// [1, (p-1)/2].  Requires p > 2.  Zero maps to zero.
std::optional<Poly> is_square(const Poly& a);

/// Number of polynomials of degree <= max_deg, i.e. q^(max_deg+1).
u64 poly_count(const FieldConfig& field, int max_deg);

/// The idx-th polynomial in the enumeration of all polynomials of degree
/// <= max_deg: idx written base q, digit i = coefficient of T^i.  The order
/// is lexicographic on coefficient vectors with the constant term fastest.
Poly poly_from_index(const FieldConfig& field, u64 idx);

/// Monic polynomial of degree exactly d: T^d + poly_from_index(idx),
/// idx < q^d.
Poly monic_poly_of_degree(const FieldConfig& field, int d, u64 idx);

/// Streaming enumeration of every polynomial of degree <= max_deg, each
/// exactly once, in the poly_from_index order.
class PolyEnumerator {
public:
  PolyEnumerator(FieldConfig field, int max_deg)
      : field_(field), total_(poly_count(field, max_deg)) {}

  std::optional<Poly> next() {
    if (idx_ >= total_) return std::nullopt;
    return poly_from_index(field_, idx_++);
  }
  u64 total() const { return total_; }

private:
  FieldConfig field_;
  u64 total_;
  u64 idx_ = 0;
};

/// Element of the rational function field F_p(T), kept reduced:
/// den monic, gcd(num, den) = 1.
class RationalFn {
public:
  RationalFn(Poly num, Poly den);
  static RationalFn from_poly(const Poly& p) {
    return RationalFn(p, Poly::constant(p.field(), 1));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FieldConfig& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  bool operator==(const RationalFn& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

private:
  Poly num_;
  Poly den_;
};

RationalFn add(const RationalFn& a, const RationalFn& b);
RationalFn sub(const RationalFn& a, const RationalFn& b);
RationalFn mul(const RationalFn& a, const RationalFn& b);
RationalFn div(const RationalFn& a, const RationalFn& b);

}  // namespace ffda
