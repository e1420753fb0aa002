#pragma once

// Slow reference computations used as independent oracles in the tests.

#include "lefschetz/exact/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

inline int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

// Leibniz expansion over all permutations.
template <class F>
F leibniz_determinant(const lefschetz::Matrix<F>& m) {
  const std::size_t n = m.rows();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  F total(0);
  do {
    F term(permutation_sign(p));
    for (std::size_t i = 0; i < n; ++i) term *= m(i, static_cast<std::size_t>(p[i]));
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline lefschetz::Matrix<lefschetz::Scalar> random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                                                          int lo = -3, int hi = 3, double zero_bias = 0.3) {
  std::uniform_int_distribution<int> val(lo, hi);
  std::bernoulli_distribution zero(zero_bias);
  lefschetz::Matrix<lefschetz::Scalar> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = zero(rng) ? 0 : val(rng);
  return m;
}

// Rank as the size of the largest nonzero minor; only for tiny matrices.
inline std::size_t minor_rank(const lefschetz::Matrix<lefschetz::Scalar>& m) {
  const std::size_t r = m.rows(), c = m.cols();
  for (std::size_t k = std::min(r, c); k > 0; --k) {
    std::vector<bool> rs(r, false), cs(c, false);
    std::fill(rs.begin(), rs.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        lefschetz::Matrix<lefschetz::Scalar> sub(k, k);
        std::size_t a = 0;
        for (std::size_t i = 0; i < r; ++i) {
          if (!rs[i]) continue;
          std::size_t b = 0;
          for (std::size_t j = 0; j < c; ++j)
            if (cs[j]) sub(a, b++) = m(i, j);
          ++a;
        }
        if (!leibniz_determinant(sub).is_zero()) return k;
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
  }
  return 0;
}

}  // namespace oracle
