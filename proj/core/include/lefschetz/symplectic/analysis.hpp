#pragma once

#include "lefschetz/complex/cohomology.hpp"
#include "lefschetz/exact/linalg.hpp"
#include "lefschetz/symplectic/model.hpp"

#include <cstddef>
#include <string>
#include <vector>

// Cohomology-level analyzers. They only need a ring with a distinguished
// degree-2 class, so they run unchanged on Künneth products.

namespace lefschetz {

struct HarmonicProfile {
  BettiVector betti;
  BettiVector betti_hr;
  int lefschetz_level = 0;

  friend bool operator==(const HarmonicProfile&, const HarmonicProfile&) = default;
};

/// Half the top degree; throws BadParameter if the ring has odd top degree
/// or no distinguished class of degree 2.
int half_dimension(const CohomologyRing& ring);

/// Matrix of ∪[ω]^p : H^k → H^{k+2p}.
Matrix<Scalar> lefschetz_matrix(const CohomologyRing& ring, int k, int p);

/// Whether L^{n−k} : H^k → H^{2n−k} is onto.
bool lefschetz_surjective(const CohomologyRing& ring, int k);

/// Largest s ≤ n−1 with L^{n−k} onto for all k ≤ s, or −1 when even
/// L^n : H^0 → H^{2n} fails to be onto.
int lefschetz_level(const CohomologyRing& ring);

/// P_k = ker L^{n−k+1} on H^k.
Subspace<Scalar> primitive_space(const CohomologyRing& ring, int k);

/// H^i_hr for i = 0..2n as subspaces of H^i, by the Yamada recursion in low
/// degrees and images of Lefschetz powers above the middle.
std::vector<Subspace<Scalar>> harmonic_subspaces(const CohomologyRing& ring);
HarmonicProfile harmonic_dims(const CohomologyRing& ring);

/// [dim P_k, dim L P_{k−2}, dim L² P_{k−4}, ...]; throws HypothesisNotMet
/// when k exceeds the Lefschetz level and InternalInconsistency if the sum
/// is not direct or does not fill H^k.
std::vector<std::size_t> primitive_decomposition(const CohomologyRing& ring, int k);

struct ParityClaim {
  std::string statement;
  int degree = 0;
  std::int64_t value = 0;
  bool holds = false;
};

struct PairingRank {
  int degree = 0;           // odd k ≤ n
  std::size_t rank = 0;     // rank of <a, b> = ∫ a ∪ L^{n−k} b on H^k
  std::size_t lefschetz_rank = 0;
};

struct ParityReport {
  int lefschetz_level = 0;
  /// Smallest odd degree ≤ n with odd Betti number, minus one; n−1 if none.
  int parity_bound = 0;
  std::vector<ParityClaim> claims;
  std::vector<PairingRank> pairings;
  bool holds() const;
};

ParityReport parity_report(const CohomologyRing& ring);

struct Prop26Row {
  int s = 0;
  bool lefschetz = false;       // (i)
  bool low_and_high = false;    // (ii) b_k^hr = b_k for k ≤ s+2 and b_{2n−k}^hr = b_{2n−k} for k ≤ s
  bool high = false;            // (iii) b_{2n−k}^hr = b_{2n−k} for k ≤ s
};

struct Prop26Report {
  std::vector<Prop26Row> rows;
};

/// Evaluates the three conditions for every s ≤ n−1; throws
/// EquivalenceViolated unless (i) ⇔ (iii) and (i) ⇒ (ii).
Prop26Report check_prop26(const CohomologyRing& ring);

inline Matrix<Scalar> lefschetz_matrix(const SymplecticModel& m, int k, int p) { return lefschetz_matrix(m.ring(), k, p); }
inline int lefschetz_level(const SymplecticModel& m) { return lefschetz_level(m.ring()); }
inline Subspace<Scalar> primitive_space(const SymplecticModel& m, int k) { return primitive_space(m.ring(), k); }
inline HarmonicProfile harmonic_dims(const SymplecticModel& m) { return harmonic_dims(m.ring()); }
inline std::vector<std::size_t> primitive_decomposition(const SymplecticModel& m, int k) {
  return primitive_decomposition(m.ring(), k);
}
inline ParityReport parity_report(const SymplecticModel& m) { return parity_report(m.ring()); }
inline Prop26Report check_prop26(const SymplecticModel& m) { return check_prop26(m.ring()); }

}  // namespace lefschetz
