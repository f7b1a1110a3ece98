#ifndef ORTHOREL_CASEBOOK_HPP
#define ORTHOREL_CASEBOOK_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orthorel/families.hpp"
#include "orthorel/functional.hpp"
#include "orthorel/relation23.hpp"

namespace orthorel {

/// One certified identity of a case run.
struct CaseCheck {
  std::string name;
  bool passed = true;
  std::optional<std::size_t> first_bad;
};

/// Accumulates checks; `expect` records the first index where `ok` is false.
class CheckList {
 public:
  void expect(const std::string& name, bool ok, std::size_t n = 0);
  void record(const std::string& name, bool ok, std::optional<std::size_t> first_bad = std::nullopt);

  [[nodiscard]] const std::vector<CaseCheck>& items() const { return items_; }
  [[nodiscard]] bool all_passed() const;
  [[nodiscard]] const CaseCheck* find(const std::string& name) const;
  /// First failing check, if any.
  [[nodiscard]] const CaseCheck* first_failure() const;

 private:
  CaseCheck& slot(const std::string& name);
  std::vector<CaseCheck> items_;
};

/// <u,Q_1> = s_1 - r_1, <u,Q_2> = t_2 - r_2(s_1 - r_1), <u,Q_n> = -r_n <u,Q_{n-1}>,
/// and the projections <u,Q_n P_{n-1}> = (s_n - r_n)|P_{n-1}|^2,
/// <u,Q_n P_{n-2}> = [t_n - r_n(s_{n-1} - r_{n-1})]|P_{n-2}|^2, for n <= depth.
/// `u` must be normalized and `p_rec` its recurrence.
std::vector<CaseCheck> moment_identity_checks(const MomentFunctional& u, const RecurrencePair& p_rec,
                                              const PolySeq& p, const PolySeq& q, const Relation23& rel,
                                              std::size_t depth);

/// Chebyshev example: u = -(1/3) x w3 + delta_1 (normalized) against the
/// fourth-kind sequence, through a 2-2 relation with the second kind.
struct ChebyshevCaseReport {
  std::size_t depth = 0;
  PartialSeq lambda_seq, a_seq, b_seq;
  MomentFunctional u;
  RecurrencePair p_rec;
  Relation23 rel;
  CaseTag tag = CaseTag::Trivial11;
  std::optional<InverseVerdict> by_equations, by_constancy;
  std::optional<FunctionalRelation> constants;
  std::pair<bool, bool> regularity{true, true};
  RegularityReport shifted;  // Hankel report of (x - 1)u
  CheckList checks;

  [[nodiscard]] bool ok() const { return checks.all_passed(); }
};

ChebyshevCaseReport chebyshev_case(std::size_t depth);

/// Jacobi chain: w -> w~ with (1-x)w~ = w, u = (1+x)w~, and v with
/// (1+x)v = w, all scaled so that <w,1> = 1.
struct JacobiChainReport {
  JacobiParams params;
  Scalar a1, c1;
  std::size_t depth = 0;
  /// First admissibility or regularity breakdown; the run stops there.
  std::optional<Failure> failure;
  PartialSeq a_seq, b_seq, c_seq;
  Scalar w_tilde0, u0, v0;
  RecurrencePair p_rec, q_rec;
  Relation23 rel;
  CaseTag tag = CaseTag::Trivial11;
  std::optional<InverseVerdict> by_equations, by_constancy;
  std::optional<FunctionalRelation> constants;
  std::pair<bool, bool> regularity{false, false};
  CheckList checks;

  [[nodiscard]] bool ok() const { return !failure && checks.all_passed(); }
};

JacobiChainReport jacobi_chain(const JacobiParams& p, const Scalar& a1, const Scalar& c1, std::size_t depth);

/// Closed forms of a_n, b_n (n = 1..count) for alpha = beta = 1/2.
/// DomainError for a1 in (-1/2, 0] or a1 = +-1, or a vanishing denominator.
std::pair<PartialSeq, PartialSeq> half_case_closed_forms(const Scalar& a1, std::size_t count);

}  // namespace orthorel

#endif  // ORTHOREL_CASEBOOK_HPP
