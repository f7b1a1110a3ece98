#ifndef ORTHOREL_FUNCTIONAL_HPP
#define ORTHOREL_FUNCTIONAL_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "orthorel/poly.hpp"
#include "orthorel/scalar.hpp"

namespace orthorel {

/// Recurrence coefficients of a monic sequence
///   P_{n+1} = (x - beta_n) P_n - gamma_n P_{n-1},  P_0 = 1, P_{-1} = 0.
/// `beta` holds beta_0, beta_1, ...; `gamma` holds gamma_1, gamma_2, ...
/// (gamma[0] is gamma_1). Use the accessors to index from 1.
struct RecurrencePair {
  std::vector<Scalar> beta;
  std::vector<Scalar> gamma;

  [[nodiscard]] const Scalar& beta_at(std::size_t n) const;
  /// n >= 1
  [[nodiscard]] const Scalar& gamma_at(std::size_t n) const;
  /// Largest n with gamma_n stored (0 if none).
  [[nodiscard]] std::size_t last_gamma() const { return gamma.size(); }

  /// gamma_n != 0 for every stored n.
  [[nodiscard]] bool regular() const;

  friend bool operator==(const RecurrencePair&, const RecurrencePair&) = default;
};

/// Truncated moment sequence mu_0..mu_N of a linear functional on polynomials.
class MomentFunctional {
 public:
  MomentFunctional() = default;
  explicit MomentFunctional(std::vector<Scalar> moments);

  [[nodiscard]] const std::vector<Scalar>& moments() const { return moments_; }
  [[nodiscard]] const Scalar& moment(std::size_t n) const;
  /// Largest usable moment index; -1 when empty.
  [[nodiscard]] int depth() const { return static_cast<int>(moments_.size()) - 1; }
  [[nodiscard]] bool is_normalized() const { return !moments_.empty() && moments_[0] == 1; }

  /// Divides every moment by mu_0. Throws DomainError when mu_0 == 0.
  [[nodiscard]] MomentFunctional normalized() const;
  [[nodiscard]] MomentFunctional scaled(const Scalar& factor) const;
  /// First `count` moments.
  [[nodiscard]] MomentFunctional truncated(std::size_t count) const;

  friend bool operator==(const MomentFunctional&, const MomentFunctional&) = default;

 private:
  std::vector<Scalar> moments_;
};

/// Outcome of reading a recurrence back from moments. Hankel determinants
/// Delta_0 .. Delta_{nonzero_hankel-1} are all nonzero; if one vanished within
/// the available moments its index is `first_vanishing`.
struct RegularityReport {
  std::size_t nonzero_hankel = 0;
  std::optional<std::size_t> first_vanishing;

  /// Highest degree k with P_0..P_k orthogonal and of nonzero norm.
  [[nodiscard]] std::optional<std::size_t> regular_through() const {
    if (nonzero_hankel == 0) return std::nullopt;
    return nonzero_hankel - 1;
  }
};

struct RecoveredRecurrence {
  RecurrencePair rec;
  RegularityReport report;
};

/// P_0 .. P_{count-1} from the three-term recurrence.
PolySeq mops_from_recurrence(const RecurrencePair& rec, std::size_t count);

/// Normalized moments mu_0..mu_depth of the functional that makes the MOPS of
/// `rec` orthogonal. Needs beta_0..beta_{(depth-1)/2} and gamma_1..gamma_{depth/2}.
MomentFunctional moments_from_recurrence(const RecurrencePair& rec, std::size_t depth);

/// sum_k p_k mu_k
Scalar apply(const MomentFunctional& f, const Polynomial& p);

/// The functional phi*f, i.e. <phi f, p> = <f, phi p>. Depth drops by deg phi.
MomentFunctional left_multiply(const MomentFunctional& f, const Polynomial& phi);

/// f + mass * delta_xi
MomentFunctional add_point_mass(const MomentFunctional& f, const Scalar& xi, const Scalar& mass);

/// A functional sigma with <sigma, 1> = first_moment and (x - c) sigma = f.
/// Depth grows by one.
MomentFunctional divide_by_linear(const MomentFunctional& f, const Scalar& c, const Scalar& first_moment);

/// Chebyshev algorithm on ordinary moments: returns every recurrence
/// coefficient the moments determine while the Hankel determinants stay
/// nonzero.
RecoveredRecurrence recurrence_from_moments(const MomentFunctional& f);

/// mu_0 * gamma_1 * ... * gamma_n = <u, P_n^2>.
Scalar norm_squared(const RecurrencePair& rec, std::size_t n, const Scalar& mu0 = 1);

}  // namespace orthorel

#endif  // ORTHOREL_FUNCTIONAL_HPP
