#include "lefschetz/constructions/donaldson.hpp"

#include "lefschetz/constructions/blowup.hpp"
#include "lefschetz/errors.hpp"

namespace lefschetz {

std::optional<int> DegreeBounds::gap_parity() const {
  if (!betti) return std::nullopt;
  std::optional<int> hp = hr_parity;
  if (!hp && exact()) hp = static_cast<int>(hr_lo % 2);
  if (!hp) return std::nullopt;
  return static_cast<int>(((*betti - *hp) % 2 + 2) % 2);
}

BoundedProfile bounded(const HarmonicProfile& exact) {
  if (exact.betti.size() != exact.betti_hr.size() || exact.betti.size() % 2 == 0)
    throw DimensionMismatch("bounded: profile must have 2n + 1 entries");
  BoundedProfile p;
  p.n = static_cast<int>(exact.betti.size() - 1) / 2;
  for (std::size_t i = 0; i < exact.betti.size(); ++i) {
    const auto hr = exact.betti_hr[i];
    p.degrees.push_back({exact.betti[i], hr, hr, static_cast<int>(hr % 2)});
  }
  return p;
}

BoundedProfile donaldson_transfer(const BoundedProfile& ambient, int l) {
  const int n = ambient.n;
  if (l < 0 || l > n) throw BadParameter("donaldson_transfer: codimension 2l must satisfy 0 <= l <= n");
  if (ambient.degrees.size() != static_cast<std::size_t>(2 * n + 1))
    throw DimensionMismatch("donaldson_transfer: profile must have 2n + 1 entries");
  if (l == 0) return ambient;
  BoundedProfile z;
  z.n = n - l;
  const int mid = n - l;
  for (int i = 0; i <= 2 * (n - l); ++i) {
    if (i < mid) {
      z.degrees.push_back(ambient.degrees[static_cast<std::size_t>(i)]);
    } else if (i > mid) {
      z.degrees.push_back(ambient.degrees[static_cast<std::size_t>(i + 2 * l)]);
    } else {
      DegreeBounds b;
      b.hr_lo = ambient.degrees[static_cast<std::size_t>(i)].hr_lo;
      z.degrees.push_back(b);
    }
  }
  return z;
}

BoundedProfile donaldson_transfer(const HarmonicProfile& ambient, int n, int l) {
  if (ambient.betti.size() != static_cast<std::size_t>(2 * n + 1))
    throw DimensionMismatch("donaldson_transfer: ambient dimension is " + std::to_string(ambient.betti.size() - 1) +
                            ", not 2n = " + std::to_string(2 * n));
  return donaldson_transfer(bounded(ambient), l);
}

BoundedProfile tower_profile(int s) {
  const auto t = tower(s);
  const auto& betti = t.stages.back().betti;
  BoundedProfile p;
  p.n = static_cast<int>(betti.size() - 1) / 2;
  const int n = p.n;
  for (int i = 0; i <= 2 * n; ++i) {
    const auto b = betti[static_cast<std::size_t>(i)];
    DegreeBounds d;
    d.betti = b;
    if (i <= s + 2 || i >= 2 * n - s) {
      d.hr_lo = b;
      d.hr_hi = b;
      d.hr_parity = static_cast<int>(b % 2);
    } else {
      d.hr_lo = 0;
      d.hr_hi = b;
      const int k = 2 * n - i;
      if (k % 2 == 1 && k > s && k <= s + 2 && k <= n) d.hr_parity = 0;
    }
    p.degrees.push_back(d);
  }
  return p;
}

}  // namespace lefschetz
