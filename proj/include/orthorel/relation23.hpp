#ifndef ORTHOREL_RELATION23_HPP
#define ORTHOREL_RELATION23_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orthorel/functional.hpp"
#include "orthorel/poly.hpp"
#include "orthorel/scalar.hpp"

namespace orthorel {

/// Coefficients of
///   Q_n + r_n Q_{n-1} = P_n + s_n P_{n-1} + t_n P_{n-2},
/// indexed from 0, with r_0 = s_0 = t_0 = t_1 = 0.
struct Relation23 {
  std::vector<Scalar> r;
  std::vector<Scalar> s;
  std::vector<Scalar> t;

  static Relation23 zero(std::size_t size);

  /// Number of stored indices (all three vectors share it once validated).
  [[nodiscard]] std::size_t size() const { return r.size(); }

  /// Equal lengths, at least one entry, and the index-0/1 conventions.
  /// Throws DomainError.
  void validate() const;

  [[nodiscard]] const Scalar& r_at(std::size_t n) const;
  [[nodiscard]] const Scalar& s_at(std::size_t n) const;
  [[nodiscard]] const Scalar& t_at(std::size_t n) const;

  friend bool operator==(const Relation23&, const Relation23&) = default;
};

/// Partially defined sequence: entry n is empty where the formula does not
/// apply (or the data run out).
using PartialSeq = std::vector<std::optional<Scalar>>;

/// Entry n of a partial sequence; DepthError when missing.
const Scalar& seq_at(const PartialSeq& seq, std::size_t n, std::string_view name);

enum class CaseTag { Trivial11, Type12, Type13, Type21, Type22, NonDegenerate23 };

std::string_view to_string(CaseTag tag);

/// Outcome of classifying a relation, with the coefficients of the reduced
/// relation it collapses to. Which of a/b/c/d are filled depends on the tag:
///   Type12: Q_n = P_n + a_n P_{n-1}
///   Type13: Q_n = P_n + a_n P_{n-1} + b_n P_{n-2}
///   Type21: Q_n + c_n Q_{n-1} = P_n
///   Type22: Q_n + c_n Q_{n-1} = P_n + d_n P_{n-1}   (when s_1 != r_1)
/// For Type22 with s_1 == r_1 the relation keeps its own coefficients and
/// `split_start` is set; only c_1 - d_1 is determined, we store c_1 = r_1.
struct RelationCase {
  CaseTag tag = CaseTag::Trivial11;
  PartialSeq a, b, c, d;
  bool split_start = false;
};

RelationCase classify(const Relation23& rel);

/// Q_0 .. Q_{p.size()-1} from P and the relation.
PolySeq generate_q(const PolySeq& p, const Relation23& rel);

/// Whether Q_n + r_n Q_{n-1} == P_n + s_n P_{n-1} + t_n P_{n-2} holds exactly.
bool relation_holds(const PolySeq& p, const PolySeq& q, const Relation23& rel, std::size_t n);

/// Candidate recurrence coefficients of Q. Computes every index the data
/// reach: beta~_n needs r,s through n+1; gamma~_n also needs t_{n+1}.
RecurrencePair candidate_tilde(const RecurrencePair& rec, const Relation23& rel);

struct AbcdSequences {
  PartialSeq a, b, c, d;
};

/// a_n (n>=1), b_n (n>=2), c_n (n>=3), d_n (n>=2) as far as the data reach.
AbcdSequences abcd_sequences(const RecurrencePair& rec, const RecurrencePair& tilde, const Relation23& rel);

struct Failure {
  std::string condition;
  std::size_t n = 0;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct InverseVerdict {
  bool is_mops = false;
  std::size_t depth = 0;
  RecurrencePair tilde;
  std::vector<Failure> failures;
  /// (A, B, C) when all three sequences are constant over the window.
  std::optional<std::array<Scalar, 3>> constants;
  /// A_n, B_n, C_n as evaluated by the constancy checker (empty elsewhere).
  PartialSeq A, B, C;

  [[nodiscard]] bool failed(std::string_view condition) const;
};

/// Data a depth-D check consumes: relation indices 0..D+1, beta_0..beta_D,
/// gamma_1..gamma_D.
std::size_t required_relation_size(std::size_t depth);
std::size_t required_recurrence_count(std::size_t depth);

/// Orthogonality of Q through degree `depth` via the (a_n)..(d_n) equations.
/// Needs depth >= 4. ContractError unless the relation is non-degenerate and
/// r_n t_n != 0 for 3 <= n <= depth.
InverseVerdict check_by_equations(const RecurrencePair& rec, const Relation23& rel, std::size_t depth);

/// Same question via constancy of A_n, B_n, C_n plus the start condition.
/// At finite depth the last A-constancy step uses s_D gamma_{D-1} / t_D in
/// place of s_D a_{D+1} / t_{D+1}, which keeps the window identical to
/// check_by_equations.
InverseVerdict check_by_constancy(const RecurrencePair& rec, const Relation23& rel, std::size_t depth);

/// lambda (x - c) u = (x^2 + a x + b) v
struct FunctionalRelation {
  Scalar lambda;
  Scalar c;
  Scalar a;
  Scalar b;

  friend bool operator==(const FunctionalRelation&, const FunctionalRelation&) = default;
};

/// Closed-form (lambda, c, a, b). DomainError naming the first vanishing
/// quantity among t_2 - r_2(s_1 - r_1), r_3, t_3, gamma_1, gamma~_1, gamma~_2.
FunctionalRelation relation_constants(const RecurrencePair& rec, const RecurrencePair& tilde,
                                      const Relation23& rel);

/// Residuals of the three equations obtained by testing the functional
/// relation against Q_0, Q_1, Q_2; all zero for consistent constants.
std::array<Scalar, 3> constants_residuals(const RecurrencePair& rec, const RecurrencePair& tilde,
                                          const Relation23& rel, const FunctionalRelation& fr);

/// Moments of v solved forward from the functional relation, m_0 = 1,
/// m_1 = beta~_0. Same depth as u.
MomentFunctional v_moments_from_relation(const MomentFunctional& u, const FunctionalRelation& fr,
                                         const Scalar& beta0_tilde);

struct RelationCheck {
  bool holds = true;
  std::optional<std::size_t> first_failure;
};

/// Tests lambda(mu_{n+1} - c mu_n) == m_{n+2} + a m_{n+1} + b m_n for
/// 0 <= n <= depth.
RelationCheck verify_functional_relation(const MomentFunctional& u, const MomentFunctional& v,
                                         const FunctionalRelation& fr, std::size_t depth);

/// (P_n(c) != 0 for 0 <= n <= depth,  t_n != r_n(s_{n-1} - r_{n-1}) for 2 <= n <= depth)
std::pair<bool, bool> regularity_criterion(const PolySeq& p, const Scalar& c, const Relation23& rel,
                                           std::size_t depth);

}  // namespace orthorel

#endif  // ORTHOREL_RELATION23_HPP
