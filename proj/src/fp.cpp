#include "ffda/fp.hpp"

namespace ffda {

namespace {

bool is_prime(u32 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

FieldConfig::FieldConfig(u32 prime) : p_(prime), q_(prime) {
  if (!is_prime(prime)) {
    throw DomainError("field order must be prime, got " +
                      std::to_string(prime));
  }
}

u32 FieldConfig::pow(u32 a, u64 e) const {
  u32 r = 1;
  u32 b = a % p_;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

u32 FieldConfig::inv(u32 a) const {
  if (a % p_ == 0) throw DomainError("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

std::optional<u32> FieldConfig::sqrt(u32 a) const {
  if (p_ == 2) throw DomainError("square roots require p > 2");
  a %= p_;
  if (a == 0) return 0u;
  // p is small here; scan the canonical half of the units.
  for (u32 s = 1; s <= (p_ - 1) / 2; ++s) {
    if (mul(s, s) == a) return s;
  }
  return std::nullopt;
}

u32 FieldConfig::canonical_unit(u32 a) const {
  a %= p_;
  if (a == 0) return 0;
  return a <= (p_ - 1) / 2 ? a : p_ - a;
}

}  // namespace ffda
