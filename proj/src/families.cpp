#include "orthorel/families.hpp"

#include <cmath>
#include <string>

#include "orthorel/errors.hpp"

namespace orthorel {

void JacobiParams::validate() const {
  if (alpha <= -1 || beta <= -1) {
    throw DomainError("Jacobi parameters must exceed -1 (got alpha=" + to_string(alpha) +
                      ", beta=" + to_string(beta) + ")");
  }
}

RecurrencePair jacobi_recurrence(const JacobiParams& p, std::size_t count) {
  p.validate();
  if (count == 0) throw DomainError("jacobi_recurrence needs count >= 1");
  const Scalar& a = p.alpha;
  const Scalar& b = p.beta;
  const Scalar s = a + b;

  RecurrencePair rec;
  rec.beta.reserve(count);
  rec.gamma.reserve(count - 1);
  rec.beta.push_back((b - a) / (s + 2));
  for (std::size_t n = 1; n < count; ++n) {
    const Scalar k = 2 * Scalar(static_cast<long>(n)) + s;
    rec.beta.push_back((b * b - a * a) / (k * (k + 2)));
  }
  for (std::size_t n = 1; n < count; ++n) {
    if (n == 1) {
      rec.gamma.push_back(4 * (1 + a) * (1 + b) / ((s + 2) * (s + 2) * (s + 3)));
      continue;
    }
    const Scalar m(static_cast<long>(n));
    const Scalar k = 2 * m + s;
    rec.gamma.push_back(4 * m * (m + a) * (m + b) * (m + s) / ((k - 1) * k * k * (k + 1)));
  }
  return rec;
}

JacobiParams chebyshev_params(int kind) {
  const Scalar half(1, 2);
  switch (kind) {
    case 2:
      return {half, half};
    case 3:
      return {-half, half};
    case 4:
      return {half, -half};
    default:
      throw DomainError("Chebyshev kind must be 2, 3 or 4 (got " + std::to_string(kind) + ")");
  }
}

RecurrencePair chebyshev_kind(int kind, std::size_t count) {
  return jacobi_recurrence(chebyshev_params(kind), count);
}

Scalar jacobi_norm_ratio(const JacobiParams& p, std::size_t n) {
  return norm_squared(jacobi_recurrence(p, n + 1), n);
}

double jacobi_norm_ratio_float(const JacobiParams& p, std::size_t n) {
  p.validate();
  if (n == 0) return 1.0;
  const double a = to_double(p.alpha);
  const double b = to_double(p.beta);
  const double m = static_cast<double>(n);
  // h_n / w_0 with every Gamma argument positive for n >= 1.
  const double log_ratio = 2 * m * std::log(2.0) + std::lgamma(m + 1) + std::lgamma(m + a + 1) +
                           std::lgamma(m + b + 1) + std::lgamma(m + a + b + 1) + std::lgamma(a + b + 2) -
                           std::lgamma(2 * m + a + b + 1) - std::lgamma(2 * m + a + b + 2) - std::lgamma(a + 1) -
                           std::lgamma(b + 1);
  return std::exp(log_ratio);
}

double jacobi_norm_ratio_discrepancy(const JacobiParams& p, std::size_t n) {
  const double exact = to_double(jacobi_norm_ratio(p, n));
  const double approx = jacobi_norm_ratio_float(p, n);
  return std::abs(exact - approx) / std::abs(exact);
}

}  // namespace orthorel
