#include "lefschetz/exact/linalg.hpp"

#include <utility>

namespace lefschetz {

namespace {

// Fraction-free forward elimination. Returns the rank and, through `sign`,
// the parity of the row swaps performed. Entries below each pivot become the
// Bareiss minors, so every division is exact.
std::size_t bareiss_forward(Matrix<Polynomial>& m, int& sign) {
  sign = 1;
  Polynomial prev(Scalar(1));
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(piv, j));
      sign = -sign;
    }
    const Polynomial& p = m(row, col);
    for (std::size_t i = row + 1; i < m.rows(); ++i) {
      for (std::size_t j = col + 1; j < m.cols(); ++j) {
        Polynomial v = p * m(i, j) - m(i, col) * m(row, j);
        m(i, j) = Polynomial::divide_exact(v, prev);
      }
      m(i, col) = Polynomial{};
    }
    prev = m(row, col);
    ++row;
  }
  return row;
}

}  // namespace

std::size_t fraction_free_rank(Matrix<Polynomial> m) {
  int sign = 1;
  return bareiss_forward(m, sign);
}

Polynomial fraction_free_determinant(Matrix<Polynomial> m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("fraction_free_determinant: matrix is not square");
  if (m.rows() == 0) return Polynomial(Scalar(1));
  int sign = 1;
  const std::size_t r = bareiss_forward(m, sign);
  if (r < m.rows()) return {};
  Polynomial det = m(m.rows() - 1, m.cols() - 1);
  return sign < 0 ? -det : det;
}

std::size_t generic_rank(const Matrix<RatFunc>& m) {
  Matrix<Polynomial> cleared(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Polynomial lcm(Scalar(1));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Polynomial& d = m(i, j).denominator();
      if (d.is_constant()) continue;
      lcm = Polynomial::divide_exact(lcm * d, Polynomial::gcd(lcm, d));
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const RatFunc scaled = m(i, j) * RatFunc(lcm);
      cleared(i, j) = scaled.numerator();
    }
  }
  return fraction_free_rank(std::move(cleared));
}

Matrix<Scalar> evaluate(const Matrix<RatFunc>& m, const Scalar& value) {
  Matrix<Scalar> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).evaluate(value);
  return out;
}

Matrix<Scalar> evaluate(const Matrix<Polynomial>& m, const Scalar& value) {
  Matrix<Scalar> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).evaluate(value);
  return out;
}

}  // namespace lefschetz
