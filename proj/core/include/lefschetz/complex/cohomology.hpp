#pragma once

#include "lefschetz/complex/lie_structure.hpp"
#include "lefschetz/exact/linalg.hpp"
#include "lefschetz/exact/matrix.hpp"
#include "lefschetz/exact/scalar.hpp"
#include "lefschetz/exterior/form.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lefschetz {

using BettiVector = std::vector<std::int64_t>;

/// A cohomology class in a fixed degree, as coordinates over that degree's basis.
struct ClassVector {
  int degree = 0;
  std::vector<Scalar> coeffs;

  bool is_zero() const { return is_zero_vector<Scalar>(coeffs); }
  friend bool operator==(const ClassVector&, const ClassVector&) = default;
};

ClassVector operator+(const ClassVector& a, const ClassVector& b);
ClassVector operator-(const ClassVector& a, const ClassVector& b);
ClassVector operator*(const Scalar& s, const ClassVector& a);

/// Graded-commutative cohomology ring with a fixed basis per degree and
/// cup-product structure constants. Values are immutable and cheap to copy.
class CohomologyRing {
 public:
  struct Data;

  CohomologyRing() = default;
  explicit CohomologyRing(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  const std::string& name() const;
  int top_degree() const;
  std::size_t betti(int k) const;
  BettiVector betti() const;
  const std::vector<std::string>& labels(int k) const;

  ClassVector zero(int k) const;
  ClassVector unit() const;
  ClassVector basis_class(int k, std::size_t i) const;

  /// Bilinear cup product; degrees past the top give the zero class of that degree.
  ClassVector cup(const ClassVector& a, const ClassVector& b) const;
  ClassVector cup_power(const ClassVector& a, int p) const;
  /// Matrix of x -> x ∪ c from H^from to H^{from + deg c}.
  Matrix<Scalar> cup_matrix(const ClassVector& c, int from) const;

  /// Sum of the top-degree coordinates weighted by the integrals of the basis classes.
  Scalar integrate(const ClassVector& top) const;

  const std::optional<ClassVector>& distinguished() const;
  CohomologyRing with_distinguished(const ClassVector& c) const;
  CohomologyRing renamed(const std::string& name) const;

  /// True for rings computed from an invariant complex.
  bool has_forms() const;
  const LieStructure& structure() const;
  /// Representative cocycle of a class (invariant rings only).
  Form<> representative(const ClassVector& c) const;
  /// Class of a closed invariant form (invariant rings only); throws
  /// std::invalid_argument if the form is not closed.
  ClassVector class_of(const Form<>& closed) const;
  /// Subspaces of closed and exact forms in degree k (invariant rings only).
  const Subspace<Scalar>& cocycles(int k) const;
  const Subspace<Scalar>& coboundaries(int k) const;

  /// Product-ring support: the class a ⊗ b, for rings built by kunneth().
  bool is_product() const;
  const CohomologyRing& left_factor() const;
  const CohomologyRing& right_factor() const;
  ClassVector tensor(const ClassVector& a, const ClassVector& b) const;

  const Data& data() const { return *data_; }

 private:
  std::shared_ptr<const Data> data_;
};

/// Chevalley-Eilenberg cohomology with echelon-complement representatives.
CohomologyRing cohomology(const LieStructure& ls);

/// H*(CP^m) = Q[h]/(h^{m+1}), distinguished class h.
CohomologyRing cp_ring(int m);

/// Graded tensor product with Koszul signs; the distinguished class is the
/// sum of the factors' distinguished classes when both have one.
CohomologyRing kunneth(const CohomologyRing& a, const CohomologyRing& b);

/// Convolution of two Betti vectors.
BettiVector convolve(const BettiVector& a, const BettiVector& b);

}  // namespace lefschetz
