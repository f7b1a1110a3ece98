#ifndef ORTHOREL_FAMILIES_HPP
#define ORTHOREL_FAMILIES_HPP

#include <cstddef>

#include "orthorel/functional.hpp"
#include "orthorel/scalar.hpp"

namespace orthorel {

/// Jacobi weight (1-x)^alpha (1+x)^beta on (-1,1); both exponents > -1.
struct JacobiParams {
  Scalar alpha;
  Scalar beta;

  /// Throws DomainError unless alpha > -1 and beta > -1.
  void validate() const;
};

/// beta_0..beta_{count-1} and gamma_1..gamma_{count-1} of the monic Jacobi
/// polynomials. beta_0 and gamma_1 use the cancelled forms so that
/// alpha + beta = 0 or -1 need no special casing.
RecurrencePair jacobi_recurrence(const JacobiParams& p, std::size_t count);

/// Chebyshev second (alpha = beta = 1/2), third (-1/2, 1/2) and fourth
/// (1/2, -1/2) kinds.
JacobiParams chebyshev_params(int kind);
RecurrencePair chebyshev_kind(int kind, std::size_t count);

/// <w, W_n^2> / <w, 1> = gamma_1 ... gamma_n.
Scalar jacobi_norm_ratio(const JacobiParams& p, std::size_t n);

/// The same ratio from the Gamma-function closed form, in double precision.
double jacobi_norm_ratio_float(const JacobiParams& p, std::size_t n);

/// Relative disagreement between the exact ratio and the Gamma form.
double jacobi_norm_ratio_discrepancy(const JacobiParams& p, std::size_t n);

}  // namespace orthorel

#endif  // ORTHOREL_FAMILIES_HPP
