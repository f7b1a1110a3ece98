#include "orthorel/relation23.hpp"

#include "orthorel/errors.hpp"

namespace orthorel {

namespace {

const Scalar& entry(const std::vector<Scalar>& v, std::size_t n, const char* name) {
  if (n >= v.size()) throw DepthError(std::string(name) + "_" + std::to_string(n) + " not available");
  return v[n];
}

void put(PartialSeq& seq, std::size_t n, Scalar value) {
  if (seq.size() <= n) seq.resize(n + 1);
  seq[n] = std::move(value);
}

}  // namespace

Relation23 Relation23::zero(std::size_t size) {
  return {std::vector<Scalar>(size), std::vector<Scalar>(size), std::vector<Scalar>(size)};
}

void Relation23::validate() const {
  if (r.size() != s.size() || r.size() != t.size()) {
    throw DomainError("relation sequences r, s, t must have equal length");
  }
  if (r.empty()) throw DomainError("relation sequences are empty");
  if (r[0] != 0 || s[0] != 0 || t[0] != 0 || (t.size() > 1 && t[1] != 0)) {
    throw DomainError("convention r0=s0=t0=t1=0 violated");
  }
}

const Scalar& Relation23::r_at(std::size_t n) const { return entry(r, n, "r"); }
const Scalar& Relation23::s_at(std::size_t n) const { return entry(s, n, "s"); }
const Scalar& Relation23::t_at(std::size_t n) const { return entry(t, n, "t"); }

const Scalar& seq_at(const PartialSeq& seq, std::size_t n, std::string_view name) {
  if (n >= seq.size() || !seq[n]) {
    throw DepthError(std::string(name) + "_" + std::to_string(n) + " not available");
  }
  return *seq[n];
}

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Trivial11:
      return "Trivial11";
    case CaseTag::Type12:
      return "Type12";
    case CaseTag::Type13:
      return "Type13";
    case CaseTag::Type21:
      return "Type21";
    case CaseTag::Type22:
      return "Type22";
    case CaseTag::NonDegenerate23:
      return "NonDegenerate23";
  }
  return "?";
}

RelationCase classify(const Relation23& rel) {
  rel.validate();
  if (rel.size() < 4) throw DepthError("classification needs relation entries through index 3");
  const auto& r = rel.r;
  const auto& s = rel.s;
  const auto& t = rel.t;
  const std::size_t size = rel.size();

  RelationCase out;
  const Scalar gap1 = s[1] - r[1];
  if (t[2] == r[2] * gap1) {
    if (gap1 == 0) {
      out.tag = CaseTag::Trivial11;
      return out;
    }
    out.tag = CaseTag::Type12;
    for (std::size_t n = 1; n < size; ++n) put(out.a, n, s[n] - r[n]);
    return out;
  }
  if (r[3] == 0) {
    out.tag = CaseTag::Type13;
    for (std::size_t n = 1; n < size; ++n) put(out.a, n, s[n] - r[n]);
    for (std::size_t n = 2; n < size; ++n) put(out.b, n, t[n] - r[n] * (s[n - 1] - r[n - 1]));
    return out;
  }
  if (t[3] == 0) {
    if (t[2] == s[2] * gap1) {
      out.tag = CaseTag::Type21;
      for (std::size_t n = 1; n < size; ++n) put(out.c, n, r[n] - s[n]);
      return out;
    }
    out.tag = CaseTag::Type22;
    if (gap1 == 0) {
      out.split_start = true;
      return out;
    }
    put(out.c, 1, r[1]);
    put(out.d, 1, s[1]);
    put(out.c, 2, r[2] - t[2] / gap1);
    put(out.d, 2, s[2] - t[2] / gap1);
    for (std::size_t n = 3; n < size; ++n) {
      put(out.c, n, r[n]);
      put(out.d, n, s[n]);
    }
    return out;
  }
  out.tag = CaseTag::NonDegenerate23;
  return out;
}

PolySeq generate_q(const PolySeq& p, const Relation23& rel) {
  rel.validate();
  if (!is_simple_set(p)) throw DomainError("generate_q needs a simple set of monic polynomials");
  if (rel.size() < p.size()) throw DepthError("relation shorter than the polynomial sequence");
  PolySeq q;
  q.reserve(p.size());
  for (std::size_t n = 0; n < p.size(); ++n) {
    Polynomial next = p[n];
    if (n >= 1) next += p[n - 1] * rel.s[n] - q[n - 1] * rel.r[n];
    if (n >= 2) next += p[n - 2] * rel.t[n];
    q.push_back(std::move(next));
  }
  return q;
}

bool relation_holds(const PolySeq& p, const PolySeq& q, const Relation23& rel, std::size_t n) {
  if (n >= p.size() || n >= q.size()) throw DepthError("relation_holds: index beyond sequences");
  Polynomial lhs = q[n];
  Polynomial rhs = p[n];
  if (n >= 1) {
    lhs += q[n - 1] * rel.r_at(n);
    rhs += p[n - 1] * rel.s_at(n);
  }
  if (n >= 2) rhs += p[n - 2] * rel.t_at(n);
  return lhs == rhs;
}

RecurrencePair candidate_tilde(const RecurrencePair& rec, const Relation23& rel) {
  rel.validate();
  const auto& r = rel.r;
  const auto& s = rel.s;
  const auto& t = rel.t;
  RecurrencePair out;
  for (std::size_t n = 0; n + 1 < rel.size() && n < rec.beta.size(); ++n) {
    out.beta.push_back(rec.beta[n] + s[n] - s[n + 1] - r[n] + r[n + 1]);
  }
  for (std::size_t n = 1; n < out.beta.size() && n <= rec.gamma.size(); ++n) {
    const auto& bt = out.beta;
    out.gamma.push_back(rec.gamma_at(n) + t[n] - t[n + 1] +
                        s[n] * (s[n + 1] - s[n] - rec.beta[n] + rec.beta[n - 1]) -
                        r[n] * (r[n + 1] - r[n] - bt[n] + bt[n - 1]));
  }
  return out;
}

AbcdSequences abcd_sequences(const RecurrencePair& rec, const RecurrencePair& tilde, const Relation23& rel) {
  rel.validate();
  const auto& r = rel.r;
  const auto& s = rel.s;
  const auto& t = rel.t;
  const std::size_t size = rel.size();
  const auto& beta = rec.beta;

  AbcdSequences out;
  for (std::size_t n = 1; n + 1 < size && n < beta.size() && n <= rec.gamma.size(); ++n) {
    put(out.a, n, rec.gamma_at(n) + t[n] - t[n + 1] + s[n] * (s[n + 1] - s[n] - beta[n] + beta[n - 1]));
  }
  for (std::size_t n = 2; n + 1 < size && n < beta.size() && n - 1 <= rec.gamma.size(); ++n) {
    put(out.b, n, s[n] * rec.gamma_at(n - 1) + t[n] * (s[n + 1] - s[n] - beta[n] + beta[n - 2]));
  }
  for (std::size_t n = 3; n < size && n - 2 <= rec.gamma.size(); ++n) {
    put(out.c, n, t[n] * rec.gamma_at(n - 2));
  }
  for (std::size_t n = 2; n < size && n - 1 <= tilde.gamma.size(); ++n) {
    put(out.d, n, r[n] * tilde.gamma_at(n - 1));
  }
  return out;
}

bool InverseVerdict::failed(std::string_view condition) const {
  for (const auto& f : failures) {
    if (f.condition == condition) return true;
  }
  return false;
}

std::size_t required_relation_size(std::size_t depth) { return depth + 2; }
std::size_t required_recurrence_count(std::size_t depth) { return depth + 1; }

namespace {

// Shared precondition gate; neither checker evaluates conditions here.
void require_nondegenerate_window(const RecurrencePair& rec, const Relation23& rel, std::size_t depth) {
  if (depth < 4) throw DepthError("inverse checks need depth >= 4");
  rel.validate();
  if (rel.size() < required_relation_size(depth)) {
    throw DepthError("relation needs indices through " + std::to_string(depth + 1));
  }
  if (rec.beta.size() < required_recurrence_count(depth) || rec.gamma.size() < depth) {
    throw DepthError("recurrence needs beta_0..beta_" + std::to_string(depth) + " and gamma_1..gamma_" +
                     std::to_string(depth));
  }
  if (classify(rel).tag != CaseTag::NonDegenerate23) {
    throw ContractError("relation is degenerate; inverse checks apply to the non-degenerate case only");
  }
  for (std::size_t n = 3; n <= depth; ++n) {
    if (rel.r[n] == 0 || rel.t[n] == 0) {
      throw ContractError("r_n t_n vanishes at n=" + std::to_string(n) + "; relation is not non-degenerate");
    }
  }
}

}  // namespace

InverseVerdict check_by_equations(const RecurrencePair& rec, const Relation23& rel, std::size_t depth) {
  require_nondegenerate_window(rec, rel, depth);
  InverseVerdict v;
  v.depth = depth;
  v.tilde = candidate_tilde(rec, rel);
  const AbcdSequences q = abcd_sequences(rec, v.tilde, rel);
  const auto& r = rel.r;
  const auto& s = rel.s;
  const auto& t = rel.t;
  auto a = [&](std::size_t n) -> const Scalar& { return seq_at(q.a, n, "a"); };
  auto b = [&](std::size_t n) -> const Scalar& { return seq_at(q.b, n, "b"); };
  auto c = [&](std::size_t n) -> const Scalar& { return seq_at(q.c, n, "c"); };
  auto d = [&](std::size_t n) -> const Scalar& { return seq_at(q.d, n, "d"); };
  auto fail = [&](const char* name, std::size_t n) { v.failures.push_back({name, n}); };

  for (std::size_t n = 1; n <= depth; ++n) {
    if (v.tilde.gamma_at(n) == 0) fail("gamma_tilde", n);
  }
  if (b(2) - d(2) != a(2) * (s[1] - r[1])) fail("ci1", 2);
  if (b(3) - d(3) != a(3) * (s[2] - r[2])) fail("ci2", 3);
  if (c(3) - b(3) * (s[1] - r[1]) != a(3) * (t[2] - s[2] * (s[1] - r[1]))) fail("ci3", 3);
  for (std::size_t n = 4; n <= depth; ++n) {
    if (b(n) != a(n) * s[n - 1]) fail("eqn1", n);
    if (c(n) != a(n) * t[n - 1]) fail("eqn2", n);
    if (d(n) != a(n) * r[n - 1]) fail("eqn3", n);
  }
  v.is_mops = v.failures.empty();
  return v;
}

InverseVerdict check_by_constancy(const RecurrencePair& rec, const Relation23& rel, std::size_t depth) {
  require_nondegenerate_window(rec, rel, depth);
  InverseVerdict v;
  v.depth = depth;
  v.tilde = candidate_tilde(rec, rel);
  const AbcdSequences q = abcd_sequences(rec, v.tilde, rel);
  const auto& r = rel.r;
  const auto& s = rel.s;
  const auto& t = rel.t;
  const auto& beta = rec.beta;
  const auto& bt = v.tilde.beta;
  auto gamma = [&](std::size_t n) -> const Scalar& { return rec.gamma_at(n); };
  auto gt = [&](std::size_t n) -> const Scalar& { return v.tilde.gamma_at(n); };
  auto a = [&](std::size_t n) -> const Scalar& { return seq_at(q.a, n, "a"); };
  auto fail = [&](const char* name, std::size_t n) { v.failures.push_back({name, n}); };

  for (std::size_t n = 1; n <= depth; ++n) {
    if (gt(n) == 0) fail("gamma_tilde", n);
  }

  // Initial conditions, written out from the defining formulas.
  const Scalar gap1 = s[1] - r[1];
  const Scalar b2 = s[2] * gamma(1) + t[2] * (s[3] - s[2] - beta[2] + beta[0]);
  const Scalar b3 = s[3] * gamma(2) + t[3] * (s[4] - s[3] - beta[3] + beta[1]);
  const Scalar c3 = t[3] * gamma(1);
  if (b2 - r[2] * gt(1) != a(2) * gap1) fail("ci1", 2);
  if (b3 - r[3] * gt(2) != a(3) * (s[2] - r[2])) fail("ci2", 3);
  if (c3 - b3 * gap1 != a(3) * (t[2] - s[2] * gap1)) fail("ci3", 3);
  if (t[4] * gamma(2) != a(4) * t[3]) fail("start", 4);

  for (std::size_t n = 3; n < depth; ++n) {
    const Scalar ratio = a(n + 1) / t[n + 1];
    put(v.A, n, s[n] * ratio - beta[n - 1] - beta[n] + s[n + 1]);
    put(v.B, n, a(n) * ratio + (s[n] - beta[n - 1]) * (s[n] * ratio - beta[n] - s[n] + s[n + 1]) + t[n] - a(n) -
                    gamma(n - 1));
  }
  // Boundary step: uses gamma_{D-1}/t_D where the interior form would need
  // a_{D+1}/t_{D+1}, i.e. data beyond the window.
  put(v.A, depth, s[depth] * gamma(depth - 1) / t[depth] - beta[depth - 1] - beta[depth] + s[depth + 1]);
  for (std::size_t n = 3; n <= depth; ++n) put(v.C, n, bt[n] - r[n + 1] - gt(n) / r[n]);

  for (std::size_t n = 4; n < depth; ++n) {
    if (*v.A[n] != *v.A[n - 1]) fail("A_const", n);
    if (*v.B[n] != *v.B[n - 1]) fail("B_const", n);
  }
  if (*v.A[depth] != *v.A[depth - 1]) fail("A_boundary", depth);
  for (std::size_t n = 4; n <= depth; ++n) {
    if (*v.C[n] != *v.C[n - 1]) fail("C_const", n);
  }

  if (!v.failed("A_const") && !v.failed("A_boundary") && !v.failed("B_const") && !v.failed("C_const")) {
    v.constants = std::array<Scalar, 3>{*v.A[3], *v.B[3], *v.C[3]};
  }
  v.is_mops = v.failures.empty();
  return v;
}

FunctionalRelation relation_constants(const RecurrencePair& rec, const RecurrencePair& tilde,
                                      const Relation23& rel) {
  rel.validate();
  if (rel.size() < 4) throw DepthError("relation_constants needs relation entries through index 3");
  const auto& r = rel.r;
  const auto& s = rel.s;
  const auto& t = rel.t;
  const Scalar gap1 = s[1] - r[1];
  const Scalar den = t[2] - r[2] * gap1;
  if (den == 0) throw DomainError("t2 - r2(s1 - r1) vanishes");
  if (r[3] == 0) throw DomainError("r3 vanishes");
  if (t[3] == 0) throw DomainError("t3 vanishes");
  const Scalar& g1 = rec.gamma_at(1);
  if (g1 == 0) throw DomainError("gamma1 vanishes");
  const Scalar& gt1 = tilde.gamma_at(1);
  const Scalar& gt2 = tilde.gamma_at(2);
  if (gt1 == 0) throw DomainError("gamma_tilde1 vanishes");
  if (gt2 == 0) throw DomainError("gamma_tilde2 vanishes");
  const Scalar& bt0 = tilde.beta_at(0);
  const Scalar& bt1 = tilde.beta_at(1);

  const Scalar rho = (r[3] * t[2] + (t[3] - r[3] * s[2]) * gap1) / den;
  const Scalar kappa = (t[3] - r[3] * (s[2] - r[2])) / den;

  FunctionalRelation fr;
  fr.c = rec.beta_at(0) - g1 / r[3] * kappa;
  fr.lambda = r[3] / t[3] * gt1 * gt2 / g1;
  fr.a = -bt0 - bt1 + gt2 / t[3] * rho;
  fr.b = bt0 * bt1 - gt1 - bt0 * gt2 / t[3] * rho + gt1 * gt2 / t[3] * kappa;
  return fr;
}

std::array<Scalar, 3> constants_residuals(const RecurrencePair& rec, const RecurrencePair& tilde,
                                          const Relation23& rel, const FunctionalRelation& fr) {
  const Scalar& b0 = rec.beta_at(0);
  const Scalar& g1 = rec.gamma_at(1);
  const Scalar& bt0 = tilde.beta_at(0);
  const Scalar& bt1 = tilde.beta_at(1);
  const Scalar& gt1 = tilde.gamma_at(1);
  const Scalar& gt2 = tilde.gamma_at(2);
  const Scalar gap1 = rel.s_at(1) - rel.r_at(1);
  const Scalar gap2 = rel.s_at(2) - rel.r_at(2);
  const Scalar den = rel.t_at(2) - rel.r_at(2) * gap1;
  const Scalar shift = b0 - fr.c;
  return {fr.lambda * shift - (bt0 * bt0 + bt0 * fr.a + fr.b + gt1),
          fr.lambda * (g1 + shift * gap1) - (bt0 + bt1 + fr.a) * gt1,
          fr.lambda * (gap2 * g1 + shift * den) - gt1 * gt2};
}

MomentFunctional v_moments_from_relation(const MomentFunctional& u, const FunctionalRelation& fr,
                                         const Scalar& beta0_tilde) {
  if (fr.lambda == 0) throw DomainError("lambda vanishes");
  if (u.depth() < 1) throw DepthError("u needs at least two moments");
  const auto& mu = u.moments();
  std::vector<Scalar> m{Scalar(1), beta0_tilde};
  for (std::size_t n = 0; n + 2 < mu.size(); ++n) {
    m.push_back(fr.lambda * (mu[n + 1] - fr.c * mu[n]) - fr.a * m[n + 1] - fr.b * m[n]);
  }
  return MomentFunctional(std::move(m));
}

RelationCheck verify_functional_relation(const MomentFunctional& u, const MomentFunctional& v,
                                         const FunctionalRelation& fr, std::size_t depth) {
  if (u.depth() < static_cast<int>(depth) + 1 || v.depth() < static_cast<int>(depth) + 2) {
    throw DepthError("functional relation check beyond available moments");
  }
  const auto& mu = u.moments();
  const auto& m = v.moments();
  for (std::size_t n = 0; n <= depth; ++n) {
    if (fr.lambda * (mu[n + 1] - fr.c * mu[n]) != m[n + 2] + fr.a * m[n + 1] + fr.b * m[n]) {
      return {false, n};
    }
  }
  return {};
}

std::pair<bool, bool> regularity_criterion(const PolySeq& p, const Scalar& c, const Relation23& rel,
                                           std::size_t depth) {
  if (p.size() <= depth) throw DepthError("regularity criterion needs P_0..P_depth");
  if (rel.size() <= depth) throw DepthError("regularity criterion needs relation entries through depth");
  bool values = true;
  for (std::size_t n = 0; n <= depth; ++n) {
    if (eval(p[n], c) == 0) values = false;
  }
  bool params = true;
  for (std::size_t n = 2; n <= depth; ++n) {
    if (rel.t[n] == rel.r[n] * (rel.s[n - 1] - rel.r[n - 1])) params = false;
  }
  return {values, params};
}

}  // namespace orthorel
