#include "lefschetz/symplectic/analysis.hpp"

#include "lefschetz/errors.hpp"

#include <algorithm>

namespace lefschetz {

namespace {

const ClassVector& omega_class(const CohomologyRing& ring) {
  const auto& w = ring.distinguished();
  if (!w || w->degree != 2) throw BadParameter(ring.name() + ": no distinguished degree-2 class");
  return *w;
}

std::size_t rank_of(const Matrix<Scalar>& m) { return m.rows() == 0 || m.cols() == 0 ? 0 : rank(m); }

}  // namespace

int half_dimension(const CohomologyRing& ring) {
  if (ring.top_degree() % 2 != 0) throw BadParameter(ring.name() + ": odd top degree");
  omega_class(ring);
  return ring.top_degree() / 2;
}

Matrix<Scalar> lefschetz_matrix(const CohomologyRing& ring, int k, int p) {
  if (p < 0) throw BadParameter("lefschetz_matrix: negative power");
  return ring.cup_matrix(ring.cup_power(omega_class(ring), p), k);
}

bool lefschetz_surjective(const CohomologyRing& ring, int k) {
  const int n = half_dimension(ring);
  return rank_of(lefschetz_matrix(ring, k, n - k)) == ring.betti(2 * n - k);
}

int lefschetz_level(const CohomologyRing& ring) {
  const int n = half_dimension(ring);
  int s = -1;
  for (int k = 0; k <= n - 1; ++k) {
    if (!lefschetz_surjective(ring, k)) break;
    s = k;
  }
  return s;
}

Subspace<Scalar> primitive_space(const CohomologyRing& ring, int k) {
  const int n = half_dimension(ring);
  if (k < 0 || k > n) throw BadParameter("primitive_space: degree outside 0..n");
  const auto m = lefschetz_matrix(ring, k, n - k + 1);
  if (m.rows() == 0) return Subspace<Scalar>::full(ring.betti(k));
  return rank_kernel_image(m).kernel;
}

std::vector<Subspace<Scalar>> harmonic_subspaces(const CohomologyRing& ring) {
  const int n = half_dimension(ring);
  const auto& w = omega_class(ring);
  std::vector<Subspace<Scalar>> hr;
  for (int i = 0; i <= 2 * n; ++i) {
    if (i <= 1) {
      hr.push_back(Subspace<Scalar>::full(ring.betti(i)));
    } else if (i <= n) {
      const auto lifted = hr[static_cast<std::size_t>(i - 2)].image_under(ring.cup_matrix(w, i - 2));
      hr.push_back(primitive_space(ring, i) + lifted);
    } else {
      const int j = 2 * n - i;
      hr.push_back(hr[static_cast<std::size_t>(j)].image_under(lefschetz_matrix(ring, j, i - n)));
    }
  }
  return hr;
}

HarmonicProfile harmonic_dims(const CohomologyRing& ring) {
  HarmonicProfile p;
  p.betti = ring.betti();
  for (const auto& s : harmonic_subspaces(ring)) p.betti_hr.push_back(static_cast<std::int64_t>(s.dim()));
  p.lefschetz_level = lefschetz_level(ring);
  return p;
}

std::vector<std::size_t> primitive_decomposition(const CohomologyRing& ring, int k) {
  const int level = lefschetz_level(ring);
  if (k > level)
    throw HypothesisNotMet("primitive decomposition of H^" + std::to_string(k) + " needs the " + std::to_string(k) +
                           "-Lefschetz property; the Lefschetz level is " + std::to_string(level));
  std::vector<std::size_t> dims;
  Subspace<Scalar> total(ring.betti(k));
  std::size_t sum = 0;
  for (int j = 0; 2 * j <= k; ++j) {
    const auto piece = primitive_space(ring, k - 2 * j).image_under(lefschetz_matrix(ring, k - 2 * j, j));
    dims.push_back(piece.dim());
    sum += piece.dim();
    total = total + piece;
  }
  if (total.dim() != sum) throw InternalInconsistency("primitive decomposition of H^" + std::to_string(k) + " is not direct");
  if (sum != ring.betti(k)) throw InternalInconsistency("primitive pieces do not fill H^" + std::to_string(k));
  return dims;
}

bool ParityReport::holds() const {
  return std::all_of(claims.begin(), claims.end(), [](const ParityClaim& c) { return c.holds; });
}

ParityReport parity_report(const CohomologyRing& ring) {
  const int n = half_dimension(ring);
  ParityReport r;
  r.lefschetz_level = lefschetz_level(ring);
  const int s = r.lefschetz_level;
  r.parity_bound = n - 1;
  for (int k = 1; k <= n; k += 2)
    if (ring.betti(k) % 2 != 0) {
      r.parity_bound = k - 1;
      break;
    }
  const auto profile = harmonic_dims(ring);
  for (int k = 1; k <= s; k += 2)
    r.claims.push_back({"b_" + std::to_string(k) + " is even", k, profile.betti[static_cast<std::size_t>(k)],
                        profile.betti[static_cast<std::size_t>(k)] % 2 == 0});
  for (int k = s + 1; k <= std::min(s + 2, n); ++k) {
    if (k % 2 == 0) continue;
    const int high = 2 * n - k;
    const auto v = profile.betti_hr[static_cast<std::size_t>(high)];
    r.claims.push_back({"b_" + std::to_string(high) + "^hr is even", high, v, v % 2 == 0});
  }
  r.claims.push_back({"Lefschetz level <= parity bound", s, r.parity_bound, s <= r.parity_bound});

  const auto& w = omega_class(ring);
  for (int k = 1; k <= n; k += 2) {
    const auto L = lefschetz_matrix(ring, k, n - k);
    const std::size_t b = ring.betti(k);
    Matrix<Scalar> pairing(b, b);
    for (std::size_t a = 0; a < b; ++a) {
      const auto lhs = ring.basis_class(k, a);
      for (std::size_t c = 0; c < b; ++c)
        pairing(a, c) = ring.integrate(ring.cup(lhs, ring.cup(ring.basis_class(k, c), ring.cup_power(w, n - k))));
    }
    r.pairings.push_back({k, rank_of(pairing), rank_of(L)});
  }
  return r;
}

Prop26Report check_prop26(const CohomologyRing& ring) {
  const int n = half_dimension(ring);
  const auto p = harmonic_dims(ring);
  auto full = [&](int k) { return k < 0 || k > 2 * n || p.betti_hr[static_cast<std::size_t>(k)] == p.betti[static_cast<std::size_t>(k)]; };
  Prop26Report report;
  for (int s = 0; s <= n - 1; ++s) {
    Prop26Row row;
    row.s = s;
    row.lefschetz = s <= p.lefschetz_level;
    row.high = true;
    for (int k = 0; k <= s; ++k) row.high = row.high && full(2 * n - k);
    row.low_and_high = row.high;
    for (int k = 0; k <= s + 2; ++k) row.low_and_high = row.low_and_high && full(k);
    if (row.lefschetz != row.high || (row.lefschetz && !row.low_and_high))
      throw EquivalenceViolated(ring.name() + ": the s-Lefschetz equivalences fail at s = " + std::to_string(s));
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace lefschetz
