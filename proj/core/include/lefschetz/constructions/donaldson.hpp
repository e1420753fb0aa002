#pragma once

#include "lefschetz/symplectic/analysis.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lefschetz {

/// What is known about one degree of a harmonic profile.
struct DegreeBounds {
  std::optional<std::int64_t> betti;
  std::int64_t hr_lo = 0;
  std::optional<std::int64_t> hr_hi;  // nullopt: no upper bound known
  std::optional<int> hr_parity;       // b^hr mod 2, when known

  bool exact() const { return hr_hi && *hr_hi == hr_lo; }
  /// (b − b^hr) mod 2, when both parities are known.
  std::optional<int> gap_parity() const;

  friend bool operator==(const DegreeBounds&, const DegreeBounds&) = default;
};

struct BoundedProfile {
  int n = 0;  // half-dimension
  std::vector<DegreeBounds> degrees;  // 0..2n

  friend bool operator==(const BoundedProfile&, const BoundedProfile&) = default;
};

BoundedProfile bounded(const HarmonicProfile& exact);

/// Profile of a codimension-2l iterated Donaldson submanifold Z_l of M.
/// Degrees below n−l copy M; degrees above n−l copy M shifted by 2l; the
/// middle degree keeps only the lower bound b^hr_{n−l}(Z) ≥ b^hr_{n−l}(M).
BoundedProfile donaldson_transfer(const BoundedProfile& ambient, int l);

/// Same, for an exactly known ambient; throws DimensionMismatch unless the
/// profile has 2n + 1 entries.
BoundedProfile donaldson_transfer(const HarmonicProfile& ambient, int n, int l);

/// What the blow-up tower gives for M_s: exact Betti numbers, b^hr = b in
/// degrees k ≤ s+2 and 2n−k for k ≤ s, and even b^hr_{2n−k} for odd k in (s, s+2].
BoundedProfile tower_profile(int s);

}  // namespace lefschetz
