#include "lefschetz/constructions/blowup.hpp"

#include "lefschetz/errors.hpp"

namespace lefschetz {

BlowupBettiModel blowup_betti(int m, const BettiVector& sub_betti) {
  if (sub_betti.empty() || (sub_betti.size() - 1) % 2 != 0)
    throw DimensionMismatch("blowup_betti: the submanifold Betti vector must have odd length 2n + 1");
  const int n = static_cast<int>(sub_betti.size() - 1) / 2;
  if (n >= m)
    throw DimensionMismatch("blowup_betti: a " + std::to_string(2 * n) + "-manifold does not embed in CP^" + std::to_string(m) +
                            " with positive codimension");
  BlowupBettiModel out;
  out.m = m;
  out.n = n;
  out.sub_betti = sub_betti;
  if (m < 2 * n + 1)
    out.warnings.push_back("m = " + std::to_string(m) + " is below 2n + 1 = " + std::to_string(2 * n + 1) +
                           "; a symplectic embedding is not guaranteed");
  for (int j = 1; j <= m - n - 1; ++j) out.thom_generators.push_back("nu^" + std::to_string(j));

  out.result_betti.assign(static_cast<std::size_t>(2 * m + 1), 0);
  for (int i = 0; i <= 2 * m; ++i) {
    auto& b = out.result_betti[static_cast<std::size_t>(i)];
    if (i % 2 == 0) b = 1;
    for (int j = 1; j <= m - n - 1; ++j) {
      const int d = i - 2 * j;
      if (d >= 0 && d <= 2 * n) b += sub_betti[static_cast<std::size_t>(d)];
    }
  }
  for (int i = 3; i <= 2 * (m - n) - 1; i += 2) {
    std::int64_t expected = 0;
    for (int d = i - 2; d >= 1; d -= 2)
      if (d <= 2 * n) expected += sub_betti[static_cast<std::size_t>(d)];
    if (out.result_betti[static_cast<std::size_t>(i)] != expected) out.odd_formula_holds = false;
  }
  return out;
}

BettiVector kodaira_thurston_betti() { return {1, 3, 4, 3, 1}; }

TowerReport tower(int s) {
  if (s < 2 || s % 2 != 0) throw BadParameter("tower: s must be even and at least 2, got " + std::to_string(s));
  TowerReport t;
  t.s = s;
  t.r = s / 2;
  std::int64_t m = 5;
  for (int j = 0; j <= s; j += 2) {
    t.m.push_back(m);
    t.m_closed_form.push_back(6 * (std::int64_t{1} << (j / 2)) - 1);
    m = 2 * m + 1;
  }
  t.stages.push_back({0, 4, static_cast<int>(t.m[0]), kodaira_thurston_betti()});
  for (int j = 2; j <= s; j += 2) {
    const auto& prev = t.stages.back();
    const auto ambient = static_cast<int>(t.m[static_cast<std::size_t>(j / 2 - 1)]);
    const auto model = blowup_betti(ambient, prev.betti);
    t.stages.push_back({j, 2 * ambient, static_cast<int>(t.m[static_cast<std::size_t>(j / 2)]), model.result_betti});
  }
  const std::int64_t m_prev = t.m[static_cast<std::size_t>(t.r - 1)];
  t.l_s = m_prev - s - 2;
  t.l_s_closed_form = 6 * (std::int64_t{1} << (t.r - 1)) - 2 * t.r - 3;
  t.dim_w = static_cast<int>(2 * (m_prev - t.l_s));

  const auto& top = t.stages.back().betti;
  t.b_s_plus_1 = top[static_cast<std::size_t>(s + 1)];
  t.low_odd_vanish = true;
  for (int j = 1; j <= t.r; ++j) t.low_odd_vanish = t.low_odd_vanish && top[static_cast<std::size_t>(2 * j - 1)] == 0;
  const int n = static_cast<int>(m_prev);
  t.parity_bound = n - 1;
  for (int k = 1; k <= n; k += 2)
    if (top[static_cast<std::size_t>(k)] % 2 != 0) {
      t.parity_bound = k - 1;
      break;
    }
  t.annotation = "M_" + std::to_string(s) + " is " + std::to_string(s) +
                 "-Lefschetz by iterating the blow-up theorem r times from KT (not recomputed)";
  return t;
}

}  // namespace lefschetz
