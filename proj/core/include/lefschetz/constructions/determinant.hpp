#pragma once

#include "lefschetz/exact/matrix.hpp"
#include "lefschetz/exact/polynomial.hpp"
#include "lefschetz/exact/scalar.hpp"

#include <optional>

namespace lefschetz {

/// Parameters of the block pairing matrix B_μ whose (i, j) block,
/// 1 ≤ i, j ≤ μ, is C(m−k, m−n−i−j)·ε^{m−n−i−j}·A.
struct DeterminantQuery {
  int m = 0;
  int n = 0;
  int k = 0;
  int mu = 1;
  Matrix<Scalar> a = Matrix<Scalar>::identity(1);
};

struct DeterminantCheck {
  Polynomial brute;   // det B_μ in ε
  Polynomial closed;  // det(A)^μ · [ε^{(m−n)μ−μ(μ+1)} · Π C(m−k+t, m−n−μ−1) / Π C(m−n−2−t, m−n−μ−1)]^d
  bool holds = false;             // brute == closed
  bool magnitude_agrees = false;  // brute == ±closed
  std::optional<Scalar> ratio;    // brute / closed when it is a constant
  int exponent = 0;               // a_μ
  Scalar lambda;                  // coefficient of ε^{a_μ} in the closed form
  bool lambda_nonzero = false;
};

/// Throws BadParameter unless n ≥ 1, 1 ≤ μ, 2μ ≤ k ≤ n + 1, μ < m − n and A is square.
DeterminantCheck pairing_determinant_check(const DeterminantQuery& q);

/// Whether (m, n, k, μ) lies in the range accepted above.
bool valid_determinant_parameters(int m, int n, int k, int mu);

}  // namespace lefschetz
