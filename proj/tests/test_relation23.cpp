#include <doctest.h>

#include <algorithm>
#include <map>

#include "orthorel/casebook.hpp"
#include "orthorel/errors.hpp"
#include "orthorel/families.hpp"
#include "orthorel/relation23.hpp"
#include "support/oracles.hpp"

using namespace orthorel;
using oracle::frac;

namespace {

const Polynomial x{Scalar(0), Scalar(1)};

// The Chebyshev-case data, taken from the casebook pipeline at depth 20.
struct ChebyshevData {
  RecurrencePair rec;
  Relation23 rel;
  MomentFunctional u;
};

const ChebyshevData& chebyshev_data() {
  static const ChebyshevData data = [] {
    const ChebyshevCaseReport rep = chebyshev_case(20);
    return ChebyshevData{rep.p_rec, rep.rel, rep.u};
  }();
  return data;
}

}  // namespace

TEST_CASE("relation validation") {
  Relation23 rel = Relation23::zero(5);
  CHECK_NOTHROW(rel.validate());
  rel.t[1] = 1;
  CHECK_THROWS_WITH_AS(rel.validate(), "convention r0=s0=t0=t1=0 violated", DomainError);
  Relation23 ragged = Relation23::zero(4);
  ragged.s.pop_back();
  CHECK_THROWS_AS(ragged.validate(), DomainError);
}

TEST_CASE("classification examples") {
  CHECK(classify(Relation23::zero(6)).tag == CaseTag::Trivial11);

  Relation23 t12 = Relation23::zero(6);
  t12.r[2] = 1;
  t12.s[1] = 1;
  t12.t[2] = 1;
  const RelationCase c12 = classify(t12);
  CHECK(c12.tag == CaseTag::Type12);
  CHECK(seq_at(c12.a, 1, "a") == 1);
  CHECK(seq_at(c12.a, 2, "a") == -1);

  const Relation23& rel = chebyshev_data().rel;
  CHECK(rel.s[1] - rel.r[1] == frac(3, 2));
  CHECK(rel.t[2] == frac(-1, 6));
  CHECK(rel.r[2] * (rel.s[1] - rel.r[1]) == frac(-3, 2));
  CHECK(classify(rel).tag == CaseTag::NonDegenerate23);

  CHECK_THROWS_AS(classify(Relation23::zero(2)), DepthError);
}

TEST_CASE("classification predicates on arbitrary relations") {
  oracle::Rng rng(31);
  std::map<CaseTag, int> seen;
  for (int i = 0; i < 600; ++i) {
    Relation23 rel = Relation23::zero(6);
    // Small integer ranges make the degenerate branches likely.
    for (std::size_t n = 1; n < 6; ++n) {
      rel.r[n] = rng.integer(-1, 1);
      rel.s[n] = rng.integer(-1, 1);
      if (n >= 2) rel.t[n] = rng.integer(-1, 1);
    }
    const RelationCase rc = classify(rel);
    ++seen[rc.tag];
    const Scalar gap = rel.s[1] - rel.r[1];
    const bool collapses = rel.t[2] == rel.r[2] * gap;
    switch (rc.tag) {
      case CaseTag::Trivial11:
        CHECK((collapses && gap == 0));
        break;
      case CaseTag::Type12:
        CHECK((collapses && gap != 0));
        break;
      case CaseTag::Type13:
        CHECK((!collapses && rel.r[3] == 0));
        break;
      case CaseTag::Type21:
        CHECK((!collapses && rel.r[3] != 0 && rel.t[3] == 0 && rel.t[2] == rel.s[2] * gap));
        break;
      case CaseTag::Type22:
        CHECK((!collapses && rel.r[3] != 0 && rel.t[3] == 0 && rel.t[2] != rel.s[2] * gap));
        CHECK(rc.split_start == (gap == 0));
        break;
      case CaseTag::NonDegenerate23:
        CHECK((!collapses && rel.r[3] != 0 && rel.t[3] != 0));
        break;
    }
    // Q is always generated from the relation, whatever the case.
    const PolySeq p = mops_from_recurrence(rng.recurrence(7), 6);
    const PolySeq q = generate_q(p, rel);
    for (std::size_t n = 0; n < 6; ++n) {
      CHECK(q[n].is_monic());
      CHECK(q[n].degree() == static_cast<int>(n));
      if (n >= 1) CHECK(relation_holds(p, q, rel, n));
    }
  }
  CHECK(seen.size() == 6);
}

TEST_CASE("degenerate relations between two MOPS reduce as classified") {
  oracle::Rng rng(32);
  const std::size_t top = 7;
  for (CaseTag target : {CaseTag::Trivial11, CaseTag::Type12, CaseTag::Type13, CaseTag::Type21, CaseTag::Type22,
                         CaseTag::NonDegenerate23}) {
    CAPTURE(to_string(target));
    int hits = 0;
    for (int attempt = 0; attempt < 80 && hits < 8; ++attempt) {
      const auto g = oracle::genuine_pair(rng, target, top);
      if (!g) continue;
      const PolySeq& p = g->p;
      const PolySeq& q = g->q;
      for (std::size_t n = 1; n <= top; ++n) REQUIRE(relation_holds(p, q, g->rel, n));
      const RelationCase rc = classify(g->rel);
      if (rc.tag != target) continue;  // an accidental further collapse
      ++hits;
      switch (rc.tag) {
        case CaseTag::Trivial11:
          for (std::size_t n = 0; n <= top; ++n) CHECK(q[n] == p[n]);
          break;
        case CaseTag::Type12:
          for (std::size_t n = 1; n <= top; ++n) CHECK(q[n] == p[n] + p[n - 1] * seq_at(rc.a, n, "a"));
          break;
        case CaseTag::Type13:
          for (std::size_t n = 2; n <= top; ++n) {
            CHECK(q[n] == p[n] + p[n - 1] * seq_at(rc.a, n, "a") + p[n - 2] * seq_at(rc.b, n, "b"));
          }
          break;
        case CaseTag::Type21:
          for (std::size_t n = 1; n <= top; ++n) CHECK(q[n] + q[n - 1] * seq_at(rc.c, n, "c") == p[n]);
          break;
        case CaseTag::Type22:
          REQUIRE_FALSE(rc.split_start);
          for (std::size_t n = 1; n <= top; ++n) {
            CHECK(q[n] + q[n - 1] * seq_at(rc.c, n, "c") == p[n] + p[n - 1] * seq_at(rc.d, n, "d"));
          }
          break;
        case CaseTag::NonDegenerate23:
          break;
      }
    }
    CHECK(hits >= 5);
  }
}

TEST_CASE("generate_q with the zero relation") {
  const PolySeq p = mops_from_recurrence(chebyshev_kind(2, 6), 6);
  CHECK(generate_q(p, Relation23::zero(6)) == p);
}

TEST_CASE("candidate recurrence") {
  const RecurrencePair rec = chebyshev_kind(2, 8);
  CHECK(candidate_tilde(rec, Relation23::zero(8)).beta == std::vector<Scalar>(rec.beta.begin(), rec.beta.end() - 1));
  Relation23 rel = Relation23::zero(4);
  rel.r[1] = frac(1, 3);
  rel.s[1] = 2;
  CHECK(candidate_tilde(rec, rel).beta_at(0) == rec.beta[0] - rel.s[1] + rel.r[1]);

  const ChebyshevData& d = chebyshev_data();
  const RecurrencePair tilde = candidate_tilde(d.rec, d.rel);
  const RecurrencePair w4 = chebyshev_kind(4, 22);
  for (std::size_t n = 0; n <= 20; ++n) CHECK(tilde.beta_at(n) == w4.beta_at(n));
  for (std::size_t n = 1; n <= 20; ++n) CHECK(tilde.gamma_at(n) == w4.gamma_at(n));
}

TEST_CASE("a, b, c, d sequences") {
  const RecurrencePair rec = chebyshev_kind(2, 8);
  const Relation23 zero = Relation23::zero(8);
  const AbcdSequences z = abcd_sequences(rec, candidate_tilde(rec, zero), zero);
  for (std::size_t n = 1; n < 6; ++n) CHECK(seq_at(z.a, n, "a") == rec.gamma_at(n));
  for (std::size_t n = 2; n < 6; ++n) CHECK(seq_at(z.b, n, "b") == 0);
  for (std::size_t n = 3; n < 6; ++n) CHECK(seq_at(z.c, n, "c") == 0);
  for (std::size_t n = 2; n < 6; ++n) CHECK(seq_at(z.d, n, "d") == 0);

  Relation23 rel = Relation23::zero(8);
  rel.r[3] = 1;
  rel.t[2] = 1;
  rel.s[4] = 2;
  const AbcdSequences s = abcd_sequences(rec, candidate_tilde(rec, rel), rel);
  CHECK(seq_at(s.c, 3, "c") == 0);
}

TEST_CASE("inverse checks on the Chebyshev data") {
  const ChebyshevData& d = chebyshev_data();
  const InverseVerdict v31 = check_by_equations(d.rec, d.rel, 20);
  const InverseVerdict v32 = check_by_constancy(d.rec, d.rel, 20);
  CHECK(v31.is_mops);
  CHECK(v32.is_mops);
  REQUIRE(v32.constants.has_value());
  CHECK((*v32.constants)[0] == 1);
  CHECK((*v32.constants)[1] == 0);
  CHECK((*v32.constants)[2] == 1);

  Relation23 bumped = d.rel;
  bumped.t[4] += 1;
  const InverseVerdict b31 = check_by_equations(d.rec, bumped, 20);
  const InverseVerdict b32 = check_by_constancy(d.rec, bumped, 20);
  CHECK_FALSE(b31.is_mops);
  CHECK_FALSE(b32.is_mops);
  CHECK(b31.failed("eqn2"));
  CHECK(b32.failed("start"));
  CHECK(std::find(b31.failures.begin(), b31.failures.end(), Failure{"eqn2", 4}) != b31.failures.end());
}

TEST_CASE("inverse check contracts") {
  const ChebyshevData& d = chebyshev_data();
  CHECK_THROWS_AS(check_by_equations(d.rec, d.rel, 3), DepthError);
  CHECK_THROWS_AS(check_by_constancy(d.rec, d.rel, 25), DepthError);
  Relation23 t12 = Relation23::zero(22);
  t12.r[2] = 1;
  t12.s[1] = 1;
  t12.t[2] = 1;
  CHECK_THROWS_AS(check_by_equations(d.rec, t12, 10), ContractError);
  CHECK_THROWS_AS(check_by_constancy(d.rec, t12, 10), ContractError);
  Relation23 r_zero = d.rel;
  r_zero.r[6] = 0;
  CHECK_THROWS_AS(check_by_equations(d.rec, r_zero, 10), ContractError);
  CHECK_THROWS_AS(check_by_constancy(d.rec, r_zero, 10), ContractError);
  CHECK(required_relation_size(12) == 14);
  CHECK(required_recurrence_count(12) == 13);
}

TEST_CASE("checkers agree, and true verdicts come with an orthogonal Q") {
  oracle::Rng rng(2024);
  const std::size_t depth = 10;
  int positives = 0;
  for (int i = 0; i < 90; ++i) {
    const auto kind = static_cast<oracle::Kind>(i % 3);
    const auto in = oracle::instance(kind, rng, depth);
    if (!in) continue;
    const InverseVerdict v31 = check_by_equations(in->rec, in->rel, depth);
    const InverseVerdict v32 = check_by_constancy(in->rec, in->rel, depth);
    CHECK(v31.is_mops == v32.is_mops);
    if (kind == oracle::Kind::Constructed) CHECK(v31.is_mops);
    if (!v31.is_mops) {
      CHECK_FALSE(v31.failures.empty());
      continue;
    }
    ++positives;
    // Q's own recurrence is the candidate one.
    const PolySeq p = mops_from_recurrence(in->rec, depth + 1);
    const PolySeq q = generate_q(p, in->rel);
    const PolySeq q_rec = mops_from_recurrence(v31.tilde, depth + 1);
    for (std::size_t n = 0; n <= depth; ++n) CHECK(q[n] == q_rec[n]);

    const FunctionalRelation fr = relation_constants(in->rec, v31.tilde, in->rel);
    for (const auto& res : constants_residuals(in->rec, v31.tilde, in->rel, fr)) CHECK(res == 0);
    REQUIRE(v32.constants.has_value());
    CHECK((*v32.constants)[0] == fr.a);
    CHECK((*v32.constants)[1] == fr.b);
    CHECK((*v32.constants)[2] == fr.c);
    if (in->built_from) {
      CHECK(fr == *in->built_from);
    }
  }
  CHECK(positives >= 20);
}

TEST_CASE("moment identities on constructed instances") {
  oracle::Rng rng(77);
  int done = 0;
  while (done < 15) {
    const auto in = oracle::constructed_instance(rng, 10);
    if (!in) continue;
    ++done;
    const PolySeq p = mops_from_recurrence(in->rec, 12);
    const PolySeq q = generate_q(p, in->rel);
    for (const auto& c : moment_identity_checks(in->u, in->rec, p, q, in->rel, 10)) {
      INFO(c.name);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("relation constants on the Chebyshev data") {
  const ChebyshevData& d = chebyshev_data();
  const RecurrencePair tilde = candidate_tilde(d.rec, d.rel);
  const FunctionalRelation fr = relation_constants(d.rec, tilde, d.rel);
  CHECK(fr.c == 1);
  CHECK(fr.a == 1);
  CHECK(fr.b == 0);
  CHECK(fr.lambda == frac(3, 2));
  const MomentFunctional v = v_moments_from_relation(d.u, fr, tilde.beta_at(0));
  CHECK(v.moment(0) == 1);
  CHECK(v.moment(1) == frac(-1, 2));
  const MomentFunctional w4 = moments_from_recurrence(chebyshev_kind(4, 40), static_cast<std::size_t>(v.depth()));
  CHECK(v == w4);

  Relation23 flat = d.rel;
  flat.t[2] = flat.r[2] * (flat.s[1] - flat.r[1]);
  CHECK_THROWS_AS(relation_constants(d.rec, tilde, flat), DomainError);
}

TEST_CASE("functional relation verification") {
  const ChebyshevData& d = chebyshev_data();
  const RecurrencePair tilde = candidate_tilde(d.rec, d.rel);
  const FunctionalRelation fr = relation_constants(d.rec, tilde, d.rel);
  MomentFunctional v = v_moments_from_relation(d.u, fr, tilde.beta_at(0));
  const std::size_t top = static_cast<std::size_t>(v.depth()) - 2;
  CHECK(verify_functional_relation(d.u, v, fr, top).holds);

  for (std::size_t k : {std::size_t{3}, std::size_t{7}, std::size_t{12}}) {
    std::vector<Scalar> m = v.moments();
    m[k] += frac(1, 5);
    const RelationCheck rc = verify_functional_relation(d.u, MomentFunctional(m), fr, top);
    CHECK_FALSE(rc.holds);
    REQUIRE(rc.first_failure.has_value());
    // m_k enters first through the equation with index k - 2.
    CHECK(*rc.first_failure == k - 2);
  }
}

TEST_CASE("regularity criterion") {
  const ChebyshevData& d = chebyshev_data();
  const PolySeq p = mops_from_recurrence(d.rec, 21);
  const auto [values, params] = regularity_criterion(p, 1, d.rel, 20);
  CHECK_FALSE(values);
  CHECK_FALSE(params);
  for (std::size_t n = 1; 2 * n + 1 <= 20; ++n) {
    CHECK(d.rel.t[2 * n + 1] == d.rel.r[2 * n + 1] * (d.rel.s[2 * n] - d.rel.r[2 * n]));
  }
  const auto single = regularity_criterion(p, 5, d.rel, 1);
  CHECK(single.first == (eval(p[1], 5) != 0));
  CHECK(single.second);
}
