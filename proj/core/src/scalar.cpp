#include "lefschetz/exact/scalar.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace lefschetz {

Scalar::Scalar(long long v) {
  if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max()) {
    q_ = static_cast<long>(v);
  } else {
    q_ = mpq_class(mpz_class(std::to_string(v)));
  }
}

Scalar::Scalar(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("Scalar: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("Scalar::parse: empty string");
  const auto slash = s.find('/');
  auto parse_int = [](const std::string& part) {
    std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (start == part.size()) throw std::invalid_argument("Scalar::parse: missing digits");
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw std::invalid_argument("Scalar::parse: bad digit in '" + part + "'");
    return mpz_class(part[0] == '+' ? part.substr(1) : part);
  };
  if (slash == std::string::npos) return Scalar(parse_int(s), mpz_class(1));
  const mpz_class den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("Scalar::parse: zero denominator");
  return Scalar(parse_int(s.substr(0, slash)), den);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
  q_ /= o.q_;
  return *this;
}

Scalar Scalar::pow(unsigned e) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), e);
  return Scalar(num, den);
}

std::int64_t Scalar::to_int64() const {
  if (!is_integer() || !q_.get_num().fits_slong_p()) throw std::overflow_error("Scalar::to_int64: " + to_string());
  return q_.get_num().get_si();
}

Scalar binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return Scalar(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar(r, mpz_class(1));
}

}  // namespace lefschetz
