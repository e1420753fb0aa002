#pragma once

#include "lefschetz/exact/polynomial.hpp"

#include <ostream>
#include <string>

namespace lefschetz {

/// Element of the rational function field Q(k). Stored as num/den with den
/// monic and gcd(num, den) = 1; zero is 0/1.
class RatFunc {
 public:
  RatFunc() : den_(Scalar(1)) {}
  RatFunc(const Scalar& c) : num_(c), den_(Scalar(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(int c) : RatFunc(Scalar(c)) {}                   // NOLINT(google-explicit-constructor)
  RatFunc(const Polynomial& p) : num_(p), den_(Scalar(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Polynomial& num, const Polynomial& den);

  /// The formal variable k.
  static RatFunc k() { return RatFunc(Polynomial::variable()); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  /// Value at a point; throws std::domain_error if the denominator vanishes there.
  Scalar evaluate(const Scalar& x) const;

  RatFunc operator-() const { return RatFunc(-num_, den_, Normalized{}); }
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.to_string(); }

 private:
  struct Normalized {};
  RatFunc(Polynomial num, Polynomial den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

}  // namespace lefschetz
