#pragma once

#include "lefschetz/exact/scalar.hpp"

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace lefschetz {

/// Univariate polynomial with Scalar coefficients in a formal variable.
/// Coefficients are stored low degree first with no trailing zeros, so the
/// zero polynomial has an empty coefficient list.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Scalar& c);  // NOLINT(google-explicit-constructor)
  Polynomial(int c) : Polynomial(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Scalar> coeffs);

  /// c * x^e
  static Polynomial monomial(const Scalar& c, unsigned e);
  static Polynomial variable() { return monomial(Scalar(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  Scalar coefficient(unsigned e) const { return e < coeffs_.size() ? coeffs_[e] : Scalar(0); }
  Scalar leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }
  /// Lowest exponent with a nonzero coefficient; -1 for zero.
  int valuation() const;

  Polynomial monic() const;
  Scalar evaluate(const Scalar& x) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Euclidean division; divisor must be nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  /// Quotient of an exact division; throws InternalInconsistency on a nonzero remainder.
  static Polynomial divide_exact(const Polynomial& a, const Polynomial& b);
  /// Monic gcd (zero if both are zero).
  static Polynomial gcd(Polynomial a, Polynomial b);

  Polynomial pow(unsigned e) const;
  std::string to_string(const std::string& var = "k") const;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

}  // namespace lefschetz
