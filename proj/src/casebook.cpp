#include "orthorel/casebook.hpp"

#include <algorithm>

#include "orthorel/errors.hpp"

namespace orthorel {

CaseCheck& CheckList::slot(const std::string& name) {
  auto it = std::find_if(items_.begin(), items_.end(), [&](const CaseCheck& c) { return c.name == name; });
  if (it != items_.end()) return *it;
  items_.push_back({name, true, std::nullopt});
  return items_.back();
}

void CheckList::expect(const std::string& name, bool ok, std::size_t n) {
  CaseCheck& c = slot(name);
  if (!ok && c.passed) {
    c.passed = false;
    c.first_bad = n;
  }
}

void CheckList::record(const std::string& name, bool ok, std::optional<std::size_t> first_bad) {
  CaseCheck& c = slot(name);
  c.passed = ok;
  c.first_bad = ok ? std::nullopt : first_bad;
}

bool CheckList::all_passed() const {
  return std::all_of(items_.begin(), items_.end(), [](const CaseCheck& c) { return c.passed; });
}

const CaseCheck* CheckList::find(const std::string& name) const {
  for (const auto& c : items_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const CaseCheck* CheckList::first_failure() const {
  for (const auto& c : items_) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

std::vector<CaseCheck> moment_identity_checks(const MomentFunctional& u, const RecurrencePair& p_rec,
                                              const PolySeq& p, const PolySeq& q, const Relation23& rel,
                                              std::size_t depth) {
  if (!u.is_normalized()) throw DomainError("moment identities assume <u,1> = 1");
  CheckList out;
  const auto& r = rel.r;
  const auto& s = rel.s;
  const auto& t = rel.t;
  out.expect("uQ1", apply(u, q.at(1)) == s[1] - r[1], 1);
  out.expect("uQ2", apply(u, q.at(2)) == t[2] - r[2] * (s[1] - r[1]), 2);
  for (std::size_t n = 3; n <= depth; ++n) {
    out.expect("uQn", apply(u, q.at(n)) == -r.at(n) * apply(u, q[n - 1]), n);
  }
  for (std::size_t n = 1; n <= depth; ++n) {
    const Scalar norm = norm_squared(p_rec, n - 1);
    out.expect("uQnPn-1", apply(u, q.at(n) * p.at(n - 1)) == (s.at(n) - r.at(n)) * norm, n);
    if (n >= 2) {
      out.expect("uQnPn-2", apply(u, q[n] * p[n - 2]) ==
                                  (t.at(n) - r[n] * (s[n - 1] - r[n - 1])) * norm_squared(p_rec, n - 2),
                 n);
    }
  }
  return out.items();
}

namespace {

void merge(CheckList& into, const std::vector<CaseCheck>& items) {
  for (const auto& c : items) into.record(c.name, c.passed, c.first_bad);
}

const Polynomial& x_poly() {
  static const Polynomial x{Scalar(0), Scalar(1)};
  return x;
}

void put(PartialSeq& seq, std::size_t n, Scalar value) {
  if (seq.size() <= n) seq.resize(n + 1);
  seq[n] = std::move(value);
}

// Runs both inverse checkers plus the closed-form constants and records
// their agreement. Returns the constants when computable.
void run_inverse(CheckList& checks, const RecurrencePair& p_rec, const Relation23& rel, std::size_t depth,
                 std::optional<InverseVerdict>& by_equations, std::optional<InverseVerdict>& by_constancy,
                 std::optional<FunctionalRelation>& constants) {
  by_equations = check_by_equations(p_rec, rel, depth);
  by_constancy = check_by_constancy(p_rec, rel, depth);
  checks.record("equations_is_mops", by_equations->is_mops, by_equations->failures.empty() ? 0 : by_equations->failures[0].n);
  checks.record("constancy_is_mops", by_constancy->is_mops, by_constancy->failures.empty() ? 0 : by_constancy->failures[0].n);
  checks.record("checkers_agree", by_equations->is_mops == by_constancy->is_mops);
  try {
    constants = relation_constants(p_rec, by_equations->tilde, rel);
    const auto res = constants_residuals(p_rec, by_equations->tilde, rel, *constants);
    checks.record("constants_consistent", res[0] == 0 && res[1] == 0 && res[2] == 0);
  } catch (const DomainError&) {
    checks.record("constants_consistent", false);
  }
  if (constants && by_constancy->constants) {
    const auto& abc = *by_constancy->constants;
    checks.record("ABC_equals_abc", abc[0] == constants->a && abc[1] == constants->b && abc[2] == constants->c);
  } else {
    checks.record("ABC_equals_abc", false);
  }
}

}  // namespace

ChebyshevCaseReport chebyshev_case(std::size_t depth) {
  if (depth < 5) throw DomainError("chebyshev case needs depth >= 5");
  ChebyshevCaseReport rep;
  rep.depth = depth;
  auto& checks = rep.checks;
  const std::size_t top = depth + 1;
  const std::size_t n_moments = 2 * top + 4;

  // u = -(1/3) x w3 + delta_1. The 2-2 coefficients only come out with
  // <w3,1> = 3/2 against the unit Dirac mass; any other scale changes P_2.
  const MomentFunctional w3 =
      moments_from_recurrence(chebyshev_kind(3, n_moments / 2 + 3), n_moments + 1).scaled(Scalar(3, 2));
  rep.u = add_point_mass(left_multiply(w3, x_poly()).scaled(Scalar(-1, 3)), 1, 1).normalized();
  const RecoveredRecurrence pu = recurrence_from_moments(rep.u);
  rep.p_rec = pu.rec;
  checks.record("u_regular", pu.report.nonzero_hankel > top, pu.report.first_vanishing);
  if (pu.report.nonzero_hankel <= top) return rep;

  const PolySeq p = mops_from_recurrence(rep.p_rec, top + 1);
  const PolySeq second = mops_from_recurrence(chebyshev_kind(2, top + 1), top + 1);
  const RecurrencePair fourth_rec = chebyshev_kind(4, n_moments / 2 + 3);
  const PolySeq q = mops_from_recurrence(fourth_rec, top + 1);

  const Scalar half(1, 2);
  for (std::size_t n = 1; n <= top; ++n) {
    put(rep.lambda_seq, n, half);
    const Scalar k(static_cast<long>(n / 2));
    if (n % 2 == 0) {
      const Scalar v = -(4 * k + 1) / (2 * (4 * k - 1));
      put(rep.a_seq, n, v);
      put(rep.b_seq, n, v);
    } else {
      put(rep.a_seq, n, (4 * k - 1) / (2 * (4 * k + 1)));
      put(rep.b_seq, n, -(4 * k + 3) / (2 * (4 * k + 1)));
    }
  }
  auto a = [&](std::size_t n) -> const Scalar& { return *rep.a_seq[n]; };
  auto b = [&](std::size_t n) -> const Scalar& { return *rep.b_seq[n]; };

  for (std::size_t n = 1; n <= top; ++n) {
    checks.expect("second_kind_link", q[n] == second[n] + second[n - 1] * half, n);
    checks.expect("two_two", p[n] + p[n - 1] * a(n) == second[n] + second[n - 1] * b(n), n);
  }

  // Only s_1 - r_1 is determined; r_1 = 0 is our choice.
  rep.rel = Relation23::zero(top + 1);
  rep.rel.s[1] = a(1) - b(1) + half;
  for (std::size_t n = 2; n <= top; ++n) {
    const Scalar f = (b(n) - half) / (b(n - 1) - half);
    rep.rel.s[n] = a(n) + half * f;
    rep.rel.t[n] = a(n - 1) * half * f;
    rep.rel.r[n] = b(n - 1) * f;
  }
  const auto& rel = rep.rel;

  for (std::size_t n = 1; n <= top; ++n) checks.expect("relation", relation_holds(p, q, rel, n), n);
  checks.record("generated_q", generate_q(p, rel) == q);
  rep.tag = classify(rel).tag;
  checks.record("non_degenerate", rep.tag == CaseTag::NonDegenerate23);
  for (std::size_t n = 2; n <= depth; ++n) checks.expect("r_t_nonzero", rel.r[n] != 0 && rel.t[n] != 0, n);
  for (std::size_t n = 3; n <= depth; n += 2) {
    checks.expect("odd_degeneracy", rel.t[n] == rel.r[n] * (rel.s[n - 1] - rel.r[n - 1]), n);
  }

  rep.shifted = recurrence_from_moments(left_multiply(rep.u, Polynomial::linear(1))).report;
  checks.record("shifted_not_regular", rep.shifted.first_vanishing.has_value());

  run_inverse(checks, rep.p_rec, rel, depth, rep.by_equations, rep.by_constancy, rep.constants);
  bool fourth = true;
  for (std::size_t n = 0; n <= depth; ++n) {
    fourth = fourth && rep.by_equations->tilde.beta[n] == fourth_rec.beta[n];
    if (n >= 1) fourth = fourth && rep.by_equations->tilde.gamma_at(n) == fourth_rec.gamma_at(n);
  }
  checks.record("tilde_is_fourth_kind", fourth);

  if (rep.constants) {
    const auto& fr = *rep.constants;
    checks.record("constants_cab", fr.c == 1 && fr.a == 1 && fr.b == 0);
    const MomentFunctional v = moments_from_recurrence(fourth_rec, static_cast<std::size_t>(rep.u.depth()));
    const RelationCheck rc = verify_functional_relation(rep.u, v, fr, static_cast<std::size_t>(rep.u.depth()) - 2);
    checks.record("functional_relation", rc.holds, rc.first_failure);
    checks.record("v_moments", v_moments_from_relation(rep.u, fr, rep.by_equations->tilde.beta[0]) == v);
    rep.regularity = regularity_criterion(p, fr.c, rel, depth);
    checks.record("criterion_values_vanish", !rep.regularity.first);
    checks.record("criterion_params_fail", !rep.regularity.second);
  }

  merge(checks, moment_identity_checks(rep.u, rep.p_rec, p, q, rel, depth));
  return rep;
}

std::pair<PartialSeq, PartialSeq> half_case_closed_forms(const Scalar& a1, std::size_t count) {
  if ((a1 > Scalar(-1, 2) && a1 <= 0) || a1 == 1 || a1 == -1) {
    throw DomainError("a1 = " + to_string(a1) + " lies outside the admissible set");
  }
  const Scalar k = 1 + 2 * a1;
  PartialSeq as, bs;
  for (std::size_t i = 1; i <= count; ++i) {
    const Scalar n(static_cast<long>(i));
    const Scalar den_a = 1 - k * (n - 1);
    const Scalar den_b = (2 * n + 1) * (1 + a1) - k * n * (n + 1);
    if (den_a == 0 || den_b == 0) {
      throw DomainError("closed form denominator vanishes at n=" + std::to_string(i));
    }
    const Scalar an = -(1 - k * n) / (2 * den_a);
    put(as, i, an);
    put(bs, i, -an * ((2 * n - 1) * (1 + a1) - k * (n - 1) * n) / den_b);
  }
  return {std::move(as), std::move(bs)};
}

JacobiChainReport jacobi_chain(const JacobiParams& params, const Scalar& a1, const Scalar& c1, std::size_t depth) {
  params.validate();
  if (depth < 5) throw DomainError("jacobi chain needs depth >= 5");
  JacobiChainReport rep;
  rep.params = params;
  rep.a1 = a1;
  rep.c1 = c1;
  rep.depth = depth;
  auto& checks = rep.checks;
  auto stop = [&](const char* condition, std::size_t n) {
    rep.failure = Failure{condition, n};
    return rep;
  };

  const Scalar& al = params.alpha;
  const Scalar& be = params.beta;
  if (a1 == 0) return stop("a1 must be nonzero", 1);
  if (c1 == 0) return stop("c1 must be nonzero", 1);
  if (2 * (al + 1) + a1 * (al + be + 2) == 0) return stop("condition_a1", 1);
  if (2 * (be + 1) - a1 * (al + be + 2) == 0) return stop("condition_a1_bis", 1);
  if (2 * (be + 1) - c1 * (al + be + 2) == 0) return stop("condition_c1", 1);

  const std::size_t top = depth + 1;
  const std::size_t n_moments = 2 * top + 4;
  const RecurrencePair w_rec = jacobi_recurrence(params, n_moments / 2 + 3);
  const Scalar& beta0 = w_rec.beta[0];

  // Forward difference equations; a zero term means the functional stops
  // being regular at that degree.
  put(rep.a_seq, 1, a1);
  put(rep.c_seq, 1, c1);
  for (std::size_t n = 1; n < top; ++n) {
    const Scalar an = w_rec.beta[n] - 1 - w_rec.gamma_at(n) / *rep.a_seq[n];
    if (an == 0) return stop("a_recursion", n + 1);
    put(rep.a_seq, n + 1, an);
  }
  for (std::size_t n = 1; n < top; ++n) {
    const Scalar cn = w_rec.beta[n] + 1 - w_rec.gamma_at(n) / *rep.c_seq[n];
    if (cn == 0) return stop("c_recursion", n + 1);
    put(rep.c_seq, n + 1, cn);
  }
  auto a = [&](std::size_t n) -> const Scalar& { return *rep.a_seq[n]; };
  auto c = [&](std::size_t n) -> const Scalar& { return *rep.c_seq[n]; };
  for (std::size_t n = 2; n <= top; ++n) {
    if (a(n) == c(n)) return stop("a_equals_c", n);
  }

  const MomentFunctional w = moments_from_recurrence(w_rec, n_moments + 1);
  rep.w_tilde0 = 1 / (1 - beta0 + a1);
  // (1 - x) w~ = w  <=>  (x - 1) w~ = -w
  const MomentFunctional w_tilde = divide_by_linear(w.scaled(-1), 1, rep.w_tilde0);
  const MomentFunctional u = left_multiply(w_tilde, Polynomial{Scalar(1), Scalar(1)});
  rep.v0 = 1 / (1 + beta0 - c1);
  const MomentFunctional v = divide_by_linear(w, -1, rep.v0);
  rep.u0 = u.moment(0);

  const RecoveredRecurrence wt_r = recurrence_from_moments(w_tilde);
  const RecoveredRecurrence u_r = recurrence_from_moments(u);
  const RecoveredRecurrence v_r = recurrence_from_moments(v);
  if (wt_r.report.nonzero_hankel <= top) return stop("w_tilde_regular", wt_r.report.nonzero_hankel);
  if (u_r.report.nonzero_hankel <= top) return stop("u_regular", u_r.report.nonzero_hankel);
  if (v_r.report.nonzero_hankel <= top) return stop("v_regular", v_r.report.nonzero_hankel);
  rep.p_rec = u_r.rec;
  rep.q_rec = v_r.rec;

  const PolySeq big_w = mops_from_recurrence(w_rec, top + 1);
  const PolySeq w_t = mops_from_recurrence(wt_r.rec, top + 1);
  const PolySeq p = mops_from_recurrence(rep.p_rec, top + 1);
  const PolySeq q = mops_from_recurrence(rep.q_rec, top + 1);

  for (std::size_t n = 1; n <= top; ++n) {
    const Scalar wt_norm = norm_squared(wt_r.rec, n, rep.w_tilde0);
    put(rep.b_seq, n, wt_norm / norm_squared(rep.p_rec, n - 1, rep.u0));
    checks.expect("tilde_norm", apply(w_tilde, w_t[n] * w_t[n]) == -a(n) * apply(w, big_w[n - 1] * big_w[n - 1]), n);
  }
  auto b = [&](std::size_t n) -> const Scalar& { return *rep.b_seq[n]; };

  for (std::size_t n = 1; n <= top; ++n) {
    checks.expect("widetilde_link", w_t[n] == big_w[n] + big_w[n - 1] * a(n), n);
    checks.expect("widetilde_p_link", w_t[n] == p[n] + p[n - 1] * b(n), n);
    checks.expect("two_two", big_w[n] + big_w[n - 1] * a(n) == p[n] + p[n - 1] * b(n), n);
    checks.expect("q_link", q[n] == big_w[n] + big_w[n - 1] * c(n), n);
    if (n >= 2) {
      checks.expect("nondegeneracy", apply(v, q[n] * q[n]) * a(n) == -c(n) * b(n) * apply(u, p[n - 1] * p[n - 1]),
                    n);
    }
  }

  rep.rel = Relation23::zero(top + 1);
  auto& rel = rep.rel;
  rel.s[1] = b(1) + c1 - a1;
  for (std::size_t n = 2; n <= top; ++n) {
    if (n == 2 && a1 == c1) {
      rel.r[2] = a(2) - c(2);
      rel.s[2] = b(2);
      rel.t[2] = (a(2) - c(2)) * c1;
      continue;
    }
    const Scalar f = (a(n) - c(n)) / (a(n - 1) - c(n - 1));
    rel.r[n] = a(n - 1) * f;
    rel.s[n] = b(n) + c(n - 1) * f;
    rel.t[n] = b(n - 1) * c(n - 1) * f;
  }
  for (std::size_t n = 1; n <= top; ++n) checks.expect("relation", relation_holds(p, q, rel, n), n);
  rep.tag = classify(rel).tag;
  checks.record("non_degenerate", rep.tag == CaseTag::NonDegenerate23);
  if (rep.tag != CaseTag::NonDegenerate23) return rep;

  run_inverse(checks, rep.p_rec, rel, depth, rep.by_equations, rep.by_constancy, rep.constants);
  bool tilde_ok = true;
  for (std::size_t n = 0; n <= depth; ++n) {
    tilde_ok = tilde_ok && rep.by_equations->tilde.beta[n] == rep.q_rec.beta[n];
    if (n >= 1) tilde_ok = tilde_ok && rep.by_equations->tilde.gamma_at(n) == rep.q_rec.gamma_at(n);
  }
  checks.record("tilde_matches_q", tilde_ok);

  const MomentFunctional un = u.normalized();
  const MomentFunctional vn = v.normalized();
  if (rep.constants) {
    const auto& fr = *rep.constants;
    checks.record("constants_cab", fr.c == 1 && fr.a == 2 && fr.b == 1);
    checks.record("lambda_scale", fr.lambda == -rep.u0 / rep.v0);
    const RelationCheck rc = verify_functional_relation(un, vn, fr, static_cast<std::size_t>(un.depth()) - 2);
    checks.record("moment_relation", rc.holds, rc.first_failure);
    rep.regularity = regularity_criterion(p, fr.c, rel, depth);
    checks.record("criterion_values_nonzero", rep.regularity.first);
    checks.record("criterion_params_hold", rep.regularity.second);
    const RegularityReport shifted = recurrence_from_moments(left_multiply(un, Polynomial::linear(fr.c))).report;
    checks.record("shifted_regular", shifted.nonzero_hankel > depth, shifted.first_vanishing);
  }
  merge(checks, moment_identity_checks(un, rep.p_rec, p, q, rel, depth));

  const Scalar half(1, 2);
  if (al == half && be == half) {
    try {
      const auto [ac, bc] = half_case_closed_forms(a1, top);
      for (std::size_t n = 1; n <= top; ++n) {
        checks.expect("closed_form_a", *ac[n] == a(n), n);
        checks.expect("closed_form_b", *bc[n] == b(n), n);
      }
    } catch (const DomainError&) {
      // a1 outside the set where the closed forms are stated; nothing to compare.
    }
  }
  return rep;
}

}  // namespace orthorel
