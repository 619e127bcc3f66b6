#pragma once

#include <cstdint>
#include <optional>

#include "ffda/errors.hpp"

namespace ffda {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

/// The prime field F_p together with the residue field order q.
///
/// q == p in this implementation, but the two are kept distinct in every
/// signature so that extension fields can be added without API changes.
class FieldConfig {
public:
  explicit FieldConfig(u32 prime);

  u32 p() const { return p_; }
  u32 q() const { return q_; }

  u32 reduce(i64 x) const {
    i64 r = x % static_cast<i64>(p_);
    return static_cast<u32>(r < 0 ? r + p_ : r);
  }
  u32 add(u32 a, u32 b) const { return (a + b) % p_; }
  u32 sub(u32 a, u32 b) const { return (a + p_ - b) % p_; }
  u32 neg(u32 a) const { return a == 0 ? 0 : p_ - a; }
  u32 mul(u32 a, u32 b) const {
    return static_cast<u32>((static_cast<u64>(a) * b) % p_);
  }
  u32 inv(u32 a) const;
  u32 pow(u32 a, u64 e) const;

  /// Square root in F_p with the canonical branch: the returned root has
  /// integer representative in [1, (p-1)/2] (0 maps to 0).  Requires p > 2.
  std::optional<u32> sqrt(u32 a) const;

  /// Canonical representative of {a, -a}: the one in [1, (p-1)/2].
  u32 canonical_unit(u32 a) const;

  bool operator==(const FieldConfig& o) const { return p_ == o.p_; }
  bool operator!=(const FieldConfig& o) const { return p_ != o.p_; }

private:
  u32 p_;
  u32 q_;
};

}  // namespace ffda
