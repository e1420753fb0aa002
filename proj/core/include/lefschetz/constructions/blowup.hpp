#pragma once

#include "lefschetz/complex/cohomology.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lefschetz {

/// Betti numbers of the symplectic blow-up of CP^m along an embedded 2n-manifold M.
/// H*(blow-up) is H*(CP^m) extended by the free H*(M)-module on ν, ν², …, ν^{m−n−1}.
struct BlowupBettiModel {
  int m = 0;
  int n = 0;
  BettiVector sub_betti;
  BettiVector result_betti;
  /// Labels of the free generators of the extension, "nu^1" … "nu^{m-n-1}".
  std::vector<std::string> thom_generators;
  /// For odd 1 < i ≤ 2(m−n)−1: b_i = b_{i−2}(M) + b_{i−4}(M) + … + b_1(M).
  bool odd_formula_holds = true;
  std::vector<std::string> warnings;
};

/// Throws DimensionMismatch unless sub_betti has even length − 1 = 2n < 2m.
/// Warns (without failing) when m < 2n + 1.
BlowupBettiModel blowup_betti(int m, const BettiVector& sub_betti);

struct TowerStage {
  int s = 0;             // M_s, s even
  int dim = 0;           // real dimension
  int embedding_m = 0;   // M_s sits in CP^{m_s}
  BettiVector betti;
};

struct TowerReport {
  int s = 0;
  int r = 0;
  /// m_0, m_2, …, m_s from the recursion m_{j+2} = 2 m_j + 1, m_0 = 5.
  std::vector<std::int64_t> m;
  /// The same values from 6·2^{j/2} − 1.
  std::vector<std::int64_t> m_closed_form;
  std::vector<TowerStage> stages;  // M_0 = KT, M_2, …, M_s
  std::int64_t l_s = 0;            // m_{s−2} − s − 2
  std::int64_t l_s_closed_form = 0;  // 6·2^{r−1} − 2r − 3
  int dim_w = 0;                   // 2(m_{s−2} − l_s)
  std::int64_t b_s_plus_1 = 0;     // b_{s+1}(M_s)
  bool low_odd_vanish = false;     // b_{2j−1}(M_s) = 0 for j ≤ r
  int parity_bound = 0;            // parity bound on the Lefschetz level of M_s
  /// Conclusion taken from the blow-up theorem, not recomputed: M_s is s-Lefschetz.
  std::string annotation;
};

/// Throws BadParameter if s is odd or below 2.
TowerReport tower(int s);

/// Betti vector of M_0 = KT.
BettiVector kodaira_thurston_betti();

}  // namespace lefschetz
