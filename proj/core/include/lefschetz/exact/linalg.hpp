#pragma once

#include "lefschetz/errors.hpp"
#include "lefschetz/exact/matrix.hpp"
#include "lefschetz/exact/polynomial.hpp"
#include "lefschetz/exact/ratfunc.hpp"
#include "lefschetz/exact/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace lefschetz {

/// Reduced row echelon form together with its pivot columns.
template <class F>
struct Echelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank() const { return pivot_cols.size(); }
};

/// Gauss-Jordan elimination. Pivot: leftmost nonzero column, first nonzero row
/// at or below the current one; pivots are scaled to 1.
template <class F>
Echelon<F> reduced_echelon(Matrix<F> m) {
  Echelon<F> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(piv, j));
    const F inv = F(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const F factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= factor * m(row, j);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

/// A linear subspace of F^ambient, stored by its reduced echelon basis. Two
/// subspaces are equal exactly when their echelon bases coincide.
template <class F>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vector<F>>& vectors) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    auto e = reduced_echelon(Matrix<F>::from_rows(vectors, ambient));
    for (std::size_t i = 0; i < e.rank(); ++i) s.basis_.push_back(e.reduced.row(i));
    s.pivots_ = std::move(e.pivot_cols);
    return s;
  }

  static Subspace full(std::size_t ambient) {
    std::vector<Vector<F>> id;
    for (std::size_t i = 0; i < ambient; ++i) {
      Vector<F> v(ambient, F(0));
      v[i] = F(1);
      id.push_back(std::move(v));
    }
    return span(ambient, id);
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector<F>>& basis() const { return basis_; }

  /// Residual of v after reduction against the echelon basis.
  Vector<F> reduce(Vector<F> v) const {
    if (v.size() != ambient_) throw DimensionMismatch("Subspace::reduce: wrong vector length");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const F c = v[pivots_[i]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        if (!basis_[i][j].is_zero()) v[j] -= c * basis_[i][j];
    }
    return v;
  }

  bool contains(const Vector<F>& v) const { return is_zero_vector<F>(reduce(v)); }

  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) return false;
    for (const auto& v : other.basis_)
      if (!contains(v)) return false;
    return true;
  }

  Subspace operator+(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("Subspace sum: ambient mismatch");
    std::vector<Vector<F>> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, all);
  }

  Subspace intersect(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("Subspace intersection: ambient mismatch");
    if (dim() == 0 || other.dim() == 0) return Subspace(ambient_);
    // Solve sum x_i a_i - sum y_j b_j = 0.
    const std::size_t p = dim(), q = other.dim();
    Matrix<F> system(ambient_, p + q);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t r = 0; r < ambient_; ++r) system(r, i) = basis_[i][r];
    for (std::size_t j = 0; j < q; ++j)
      for (std::size_t r = 0; r < ambient_; ++r) system(r, p + j) = -other.basis_[j][r];
    auto e = reduced_echelon(system);
    std::vector<Vector<F>> vs;
    std::vector<bool> is_pivot(p + q, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    for (std::size_t f = 0; f < p + q; ++f) {
      if (is_pivot[f]) continue;
      Vector<F> x(p + q, F(0));
      x[f] = F(1);
      for (std::size_t i = 0; i < e.rank(); ++i) x[e.pivot_cols[i]] = -e.reduced(i, f);
      Vector<F> v(ambient_, F(0));
      for (std::size_t i = 0; i < p; ++i)
        if (!x[i].is_zero())
          for (std::size_t r = 0; r < ambient_; ++r) v[r] += x[i] * basis_[i][r];
      vs.push_back(std::move(v));
    }
    return span(ambient_, vs);
  }

  /// Image of this subspace under a linear map with matching column count.
  Subspace image_under(const Matrix<F>& map) const {
    if (map.cols() != ambient_) throw DimensionMismatch("Subspace::image_under: size mismatch");
    std::vector<Vector<F>> vs;
    for (const auto& b : basis_) vs.push_back(map.apply(b));
    return span(map.rows(), vs);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector<F>> basis_;
  std::vector<std::size_t> pivots_;
};

template <class F>
struct RankKernelImage {
  std::size_t rank = 0;
  Subspace<F> kernel;
  Subspace<F> image;
};

template <class F>
std::vector<Vector<F>> kernel_vectors(const Echelon<F>& e, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vector<F>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector<F> v(cols, F(0));
    v[f] = F(1);
    for (std::size_t i = 0; i < e.rank(); ++i) v[e.pivot_cols[i]] = -e.reduced(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

template <class F>
RankKernelImage<F> rank_kernel_image(const Matrix<F>& m) {
  RankKernelImage<F> out;
  auto e = reduced_echelon(m);
  out.rank = e.rank();
  out.kernel = Subspace<F>::span(m.cols(), kernel_vectors(e, m.cols()));
  std::vector<Vector<F>> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  out.image = Subspace<F>::span(m.rows(), cols);
  return out;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return reduced_echelon(m).rank();
}

/// Some x with m x = target, free variables set to zero; nullopt if inconsistent.
template <class F>
std::optional<Vector<F>> solve(const Matrix<F>& m, std::span<const F> target) {
  if (target.size() != m.rows()) throw DimensionMismatch("solve: target length must equal row count");
  Matrix<F> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = target[i];
  }
  auto e = reduced_echelon(std::move(aug));
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
  Vector<F> x(m.cols(), F(0));
  for (std::size_t i = 0; i < e.rank(); ++i) x[e.pivot_cols[i]] = e.reduced(i, m.cols());
  return x;
}

/// Determinant of a square matrix over a field, by elimination.
template <class F>
F determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant: matrix is not square");
  const std::size_t n = m.rows();
  F det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) return F(0);
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(col, j), m(piv, j));
      det = -det;
    }
    det *= m(col, col);
    const F inv = F(1) / m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      const F factor = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
    }
  }
  return det;
}

/// dim ambient - dim sub; throws NotContained unless sub is a subspace of ambient.
template <class F>
std::size_t quotient_dim(const Subspace<F>& sub, const Subspace<F>& ambient) {
  if (!ambient.contains(sub)) throw NotContained("quotient_dim: subspace is not contained in the ambient space");
  return ambient.dim() - sub.dim();
}

/// Coordinates with respect to a fixed list of linearly independent vectors.
template <class F>
class SpanCoordinates {
 public:
  SpanCoordinates() = default;
  SpanCoordinates(std::size_t ambient, const std::vector<Vector<F>>& generators)
      : ambient_(ambient), count_(generators.size()) {
    Matrix<F> aug(ambient, count_ + ambient);
    for (std::size_t j = 0; j < count_; ++j) {
      if (generators[j].size() != ambient) throw DimensionMismatch("SpanCoordinates: generator length");
      for (std::size_t i = 0; i < ambient; ++i) aug(i, j) = generators[j][i];
    }
    for (std::size_t i = 0; i < ambient; ++i) aug(i, count_ + i) = F(1);
    auto e = reduced_echelon(std::move(aug));
    for (std::size_t j = 0; j < count_; ++j)
      if (j >= e.rank() || e.pivot_cols[j] != j)
        throw InternalInconsistency("SpanCoordinates: generators are linearly dependent");
    transform_ = Matrix<F>(ambient, ambient);
    for (std::size_t i = 0; i < ambient; ++i)
      for (std::size_t j = 0; j < ambient; ++j) transform_(i, j) = e.reduced(i, count_ + j);
  }

  std::size_t size() const { return count_; }

  /// Coefficients c with v = sum c_j g_j, or nullopt if v is outside the span.
  std::optional<Vector<F>> coordinates(std::span<const F> v) const {
    auto w = transform_.apply(v);
    for (std::size_t i = count_; i < ambient_; ++i)
      if (!w[i].is_zero()) return std::nullopt;
    w.resize(count_);
    return w;
  }

 private:
  std::size_t ambient_ = 0;
  std::size_t count_ = 0;
  Matrix<F> transform_;
};

/// Rank of a polynomial matrix over the fraction field, by fraction-free
/// (Bareiss) elimination in the polynomial ring.
std::size_t fraction_free_rank(Matrix<Polynomial> m);

/// Determinant of a square polynomial matrix by Bareiss elimination.
Polynomial fraction_free_determinant(Matrix<Polynomial> m);

/// Rank over the function field: rows are cleared of denominators and the
/// resulting polynomial matrix is ranked fraction-free.
std::size_t generic_rank(const Matrix<RatFunc>& m);

/// Entrywise substitution k = value.
Matrix<Scalar> evaluate(const Matrix<RatFunc>& m, const Scalar& value);
Matrix<Scalar> evaluate(const Matrix<Polynomial>& m, const Scalar& value);

}  // namespace lefschetz
