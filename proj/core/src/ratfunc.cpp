#include "lefschetz/exact/ratfunc.hpp"

#include <stdexcept>

namespace lefschetz {

RatFunc::RatFunc(const Polynomial& num, const Polynomial& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Scalar(1));
    return;
  }
  if (!den_.is_constant()) {
    const Polynomial g = Polynomial::gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = Polynomial::divide_exact(num_, g);
      den_ = Polynomial::divide_exact(den_, g);
    }
  }
  const Scalar lead = den_.leading();
  if (!lead.is_one()) {
    const Polynomial inv(lead.inverse());
    num_ *= inv;
    den_ *= inv;
  }
}

Scalar RatFunc::evaluate(const Scalar& x) const {
  const Scalar d = den_.evaluate(x);
  if (d.is_zero()) throw std::domain_error("RatFunc::evaluate: pole at " + x.to_string());
  return num_.evaluate(x) / d;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::string RatFunc::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace lefschetz
