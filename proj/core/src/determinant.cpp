#include "lefschetz/constructions/determinant.hpp"

#include "lefschetz/errors.hpp"
#include "lefschetz/exact/linalg.hpp"

namespace lefschetz {

bool valid_determinant_parameters(int m, int n, int k, int mu) {
  return n >= 1 && mu >= 1 && 2 * mu <= k && k <= n + 1 && mu < m - n;
}

DeterminantCheck pairing_determinant_check(const DeterminantQuery& q) {
  if (!valid_determinant_parameters(q.m, q.n, q.k, q.mu))
    throw BadParameter("pairing_determinant_check: need n >= 1, 1 <= mu, 2 mu <= k <= n + 1 and mu < m - n; got m = " +
                       std::to_string(q.m) + ", n = " + std::to_string(q.n) + ", k = " + std::to_string(q.k) +
                       ", mu = " + std::to_string(q.mu));
  if (q.a.rows() == 0 || q.a.rows() != q.a.cols()) throw BadParameter("pairing_determinant_check: A must be square and nonempty");
  const int m = q.m, n = q.n, k = q.k, mu = q.mu;
  const std::size_t d = q.a.rows();

  Matrix<Polynomial> B(static_cast<std::size_t>(mu) * d, static_cast<std::size_t>(mu) * d);
  for (int i = 1; i <= mu; ++i)
    for (int j = 1; j <= mu; ++j) {
      const int e = m - n - i - j;
      if (e < 0) continue;
      const Scalar c = binomial(m - k, e);
      if (c.is_zero()) continue;
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
          if (!q.a(a, b).is_zero())
            B(static_cast<std::size_t>(i - 1) * d + a, static_cast<std::size_t>(j - 1) * d + b) =
                Polynomial::monomial(c * q.a(a, b), static_cast<unsigned>(e));
    }

  DeterminantCheck out;
  out.brute = fraction_free_determinant(std::move(B));

  Scalar quotient(1);
  for (int t = 0; t < mu; ++t) {
    quotient *= binomial(m - k + t, m - n - mu - 1);
    quotient /= binomial(m - n - 2 - t, m - n - mu - 1);
  }
  const int block_exponent = (m - n) * mu - mu * (mu + 1);
  out.exponent = block_exponent * static_cast<int>(d);
  out.lambda = determinant(q.a).pow(static_cast<unsigned>(mu)) * quotient.pow(static_cast<unsigned>(d));
  out.lambda_nonzero = !out.lambda.is_zero();
  out.closed = Polynomial::monomial(out.lambda, static_cast<unsigned>(out.exponent));

  out.holds = out.brute == out.closed;
  if (out.closed.is_zero()) {
    out.magnitude_agrees = out.brute.is_zero();
  } else {
    const Scalar c = out.brute.leading() / out.closed.leading();
    if (out.brute == Polynomial(c) * out.closed) out.ratio = c;
    out.magnitude_agrees = out.ratio && (out.ratio->is_one() || (-*out.ratio).is_one());
  }
  return out;
}

}  // namespace lefschetz
