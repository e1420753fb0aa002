#include "lefschetz/constructions/auroux.hpp"

#include "lefschetz/errors.hpp"
#include "lefschetz/exact/linalg.hpp"
#include "lefschetz/exact/ratfunc.hpp"
#include "lefschetz/symplectic/analysis.hpp"

namespace lefschetz {

std::int64_t ambient_b3hr(const CohomologyRing& ring) {
  const int n = half_dimension(ring);
  if (n < 3) {
    const auto hr = harmonic_dims(ring).betti_hr;
    return hr.size() > 3 ? hr[3] : 0;
  }
  const auto b1 = static_cast<std::int64_t>(ring.betti(1));
  const auto rank_low = static_cast<std::int64_t>(rank(lefschetz_matrix(ring, 1, n - 2)));
  const auto rank_high = static_cast<std::int64_t>(rank(lefschetz_matrix(ring, 1, n - 1)));
  return static_cast<std::int64_t>(ring.betti(3)) + (b1 - rank_low) - (b1 - rank_high);
}

namespace {

// c_i(E) ∪ [ω]^{r−i} for i = 0..r, the coefficient of k^{r−i} in PD[Z_r].
std::vector<ClassVector> pd_terms(const AurouxQuery& q) {
  const auto& ring = q.ring;
  const int n = half_dimension(ring);
  if (q.r < 0) throw BadParameter("auroux: negative rank");
  if (n - q.r <= 3)
    throw HypothesisNotMet("auroux: needs n - r > 3, got n = " + std::to_string(n) + ", r = " + std::to_string(q.r));
  if (q.chern.size() > static_cast<std::size_t>(q.r))
    throw BadParameter("auroux: more Chern classes than the rank of E");
  const ClassVector& w = *ring.distinguished();
  std::vector<ClassVector> terms;
  for (int i = 0; i <= q.r; ++i) {
    ClassVector c = ring.unit();
    if (i > 0) {
      if (static_cast<std::size_t>(i) <= q.chern.size()) {
        c = q.chern[static_cast<std::size_t>(i - 1)];
        if (c.degree != 2 * i || c.coeffs.size() != ring.betti(2 * i))
          throw BadParameter("auroux: c_" + std::to_string(i) + " must be a class of degree " + std::to_string(2 * i));
      } else {
        c = ring.zero(2 * i);
      }
    }
    terms.push_back(ring.cup(c, ring.cup_power(w, q.r - i)));
  }
  return terms;
}

Matrix<Polynomial> pd_map(const AurouxQuery& q, const std::vector<ClassVector>& terms, int omega_power) {
  const auto& ring = q.ring;
  const auto wp = ring.cup_power(*ring.distinguished(), omega_power);
  Matrix<Polynomial> out(ring.betti(1 + 2 * omega_power + 2 * q.r), ring.betti(1));
  for (int i = 0; i <= q.r; ++i) {
    const auto m = ring.cup_matrix(ring.cup(wp, terms[static_cast<std::size_t>(i)]), 1);
    const Polynomial kpow = Polynomial::monomial(Scalar(1), static_cast<unsigned>(q.r - i));
    for (std::size_t a = 0; a < m.rows(); ++a)
      for (std::size_t b = 0; b < m.cols(); ++b)
        if (!m(a, b).is_zero()) out(a, b) += kpow * Polynomial(m(a, b));
  }
  return out;
}

AurouxKernel kernel_of(const Matrix<Polynomial>& m, int target) {
  AurouxKernel k;
  k.target_degree = target;
  const std::size_t cols = m.cols();
  k.kernel = cols - fraction_free_rank(m);
  Matrix<RatFunc> rf(m.rows(), m.cols());
  for (std::size_t a = 0; a < m.rows(); ++a)
    for (std::size_t b = 0; b < m.cols(); ++b) rf(a, b) = RatFunc(m(a, b));
  k.kernel_ratfunc = cols - rank(rf);
  k.kernel_at_1000 = cols - rank(evaluate(m, Scalar(1000)));
  k.kernel_at_1001 = cols - rank(evaluate(m, Scalar(1001)));
  return k;
}

}  // namespace

std::vector<Polynomial> poincare_dual(const AurouxQuery& q) {
  const auto terms = pd_terms(q);
  std::vector<Polynomial> out(q.ring.betti(2 * q.r));
  for (int i = 0; i <= q.r; ++i) {
    const Polynomial kpow = Polynomial::monomial(Scalar(1), static_cast<unsigned>(q.r - i));
    const auto& c = terms[static_cast<std::size_t>(i)].coeffs;
    for (std::size_t a = 0; a < out.size(); ++a)
      if (!c[a].is_zero()) out[a] += kpow * Polynomial(c[a]);
  }
  return out;
}

AurouxResult auroux_b3hr(const AurouxQuery& q) {
  const auto terms = pd_terms(q);
  AurouxResult res;
  res.n = half_dimension(q.ring);
  res.r = q.r;
  res.b3 = static_cast<std::int64_t>(q.ring.betti(3));
  res.first = kernel_of(pd_map(q, terms, res.n - q.r - 2), 2 * res.n - 3);
  res.second = kernel_of(pd_map(q, terms, res.n - q.r - 1), 2 * res.n - 1);
  res.b3hr = res.b3 + static_cast<std::int64_t>(res.first.kernel) - static_cast<std::int64_t>(res.second.kernel);
  return res;
}

std::vector<std::int64_t> normal_chern(int m, int n, int top) {
  if (top < 0 || top > n) throw BadParameter("normal_chern: need 0 <= top <= n");
  std::vector<std::int64_t> out;
  for (int i = 0; i <= top; ++i) out.push_back(binomial(m + 1, i).to_int64());
  return out;
}

std::vector<ClassVector> normal_chern_classes(const CohomologyRing& ring, int m, int top) {
  const int n = half_dimension(ring);
  const auto coeff = normal_chern(m, n, top);
  std::vector<ClassVector> out;
  for (int i = 1; i <= top; ++i)
    out.push_back(Scalar(coeff[static_cast<std::size_t>(i)]) * ring.cup_power(*ring.distinguished(), i));
  return out;
}

std::vector<ClassVector> whitney_sum(const CohomologyRing& ring, const std::vector<ClassVector>& e, int rank_e,
                                     const std::vector<ClassVector>& f, int rank_f) {
  auto total = [&](const std::vector<ClassVector>& c, int rank) {
    if (c.size() > static_cast<std::size_t>(rank)) throw BadParameter("whitney_sum: more Chern classes than the rank");
    std::vector<ClassVector> t{ring.unit()};
    for (int i = 1; i <= rank; ++i) {
      if (static_cast<std::size_t>(i) <= c.size()) {
        const auto& x = c[static_cast<std::size_t>(i - 1)];
        if (x.degree != 2 * i || x.coeffs.size() != ring.betti(2 * i))
          throw BadParameter("whitney_sum: c_" + std::to_string(i) + " has the wrong degree");
        t.push_back(x);
      } else {
        t.push_back(ring.zero(2 * i));
      }
    }
    return t;
  };
  const auto ce = total(e, rank_e), cf = total(f, rank_f);
  std::vector<ClassVector> out;
  for (int t = 1; t <= rank_e + rank_f; ++t) {
    ClassVector c = ring.zero(2 * t);
    for (int i = 0; i <= std::min(t, rank_e); ++i) {
      const int j = t - i;
      if (j > rank_f) continue;
      c = c + ring.cup(ce[static_cast<std::size_t>(i)], cf[static_cast<std::size_t>(j)]);
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace lefschetz
