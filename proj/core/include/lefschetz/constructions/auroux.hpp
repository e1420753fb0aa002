#pragma once

#include "lefschetz/complex/cohomology.hpp"
#include "lefschetz/exact/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lefschetz {

/// b_3 + dim ker(L^{n−2}: H¹ → H^{2n−3}) − dim ker(L^{n−1}: H¹ → H^{2n−1});
/// below dimension 6 the Yamada recursion is used instead.
std::int64_t ambient_b3hr(const CohomologyRing& ring);

struct AurouxQuery {
  CohomologyRing ring;            // ambient X with distinguished [ω]
  int r = 1;                      // complex rank of E
  std::vector<ClassVector> chern;  // c_1(E), …, c_r(E); missing entries are zero
};

struct AurouxKernel {
  int target_degree = 0;
  std::size_t kernel = 0;          // over Q[k]
  std::size_t kernel_ratfunc = 0;  // over Q(k), independent elimination
  std::size_t kernel_at_1000 = 0;
  std::size_t kernel_at_1001 = 0;
  bool consistent() const {
    return kernel == kernel_ratfunc && kernel == kernel_at_1000 && kernel == kernel_at_1001;
  }
};

struct AurouxResult {
  int n = 0;
  int r = 0;
  std::int64_t b3 = 0;
  AurouxKernel first;   // ∪ω^{n−r−2} ∪ PD : H¹ → H^{2n−3}
  AurouxKernel second;  // ∪ω^{n−r−1} ∪ PD : H¹ → H^{2n−1}
  std::int64_t b3hr = 0;
};

/// Coordinates in H^{2r} of PD[Z_r] = c_r(E ⊗ L^k) = Σ_i k^{r−i} c_i(E) [ω]^{r−i},
/// as polynomials in k.
std::vector<Polynomial> poincare_dual(const AurouxQuery& q);

/// Harmonic b_3 of the Auroux submanifold for generic large k. Throws
/// HypothesisNotMet unless n − r > 3, BadParameter on Chern classes of the
/// wrong degree.
AurouxResult auroux_b3hr(const AurouxQuery& q);

/// c_i(N) = C(m+1, i)·[ω]^i for i = 0..top, as coefficients of [ω]^i.
std::vector<std::int64_t> normal_chern(int m, int n, int top);

/// The classes C(m+1, i)·[ω]^i, i = 1..top, in the ring.
std::vector<ClassVector> normal_chern_classes(const CohomologyRing& ring, int m, int top);

/// Chern classes c_1..c_{ra+rb} of E ⊕ F from those of E (rank ra) and F (rank rb).
std::vector<ClassVector> whitney_sum(const CohomologyRing& ring, const std::vector<ClassVector>& e, int rank_e,
                                     const std::vector<ClassVector>& f, int rank_f);

}  // namespace lefschetz
