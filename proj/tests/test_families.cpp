#include <doctest.h>

#include <cmath>

#include "orthorel/errors.hpp"
#include "orthorel/families.hpp"
#include "support/oracles.hpp"

using namespace orthorel;

TEST_CASE("Jacobi recurrence at alpha = beta = 1/2") {
  const RecurrencePair rec = jacobi_recurrence({Scalar(1, 2), Scalar(1, 2)}, 12);
  for (const auto& b : rec.beta) CHECK(b == 0);
  for (const auto& g : rec.gamma) CHECK(g == Scalar(1, 4));
}

TEST_CASE("Chebyshev kinds") {
  for (int kind : {2, 3, 4}) {
    const RecurrencePair rec = chebyshev_kind(kind, 10);
    for (const auto& g : rec.gamma) CHECK(g == Scalar(1, 4));
    for (std::size_t n = 1; n < rec.beta.size(); ++n) CHECK(rec.beta[n] == 0);
  }
  CHECK(chebyshev_kind(2, 3).beta[0] == 0);
  CHECK(chebyshev_kind(3, 3).beta[0] == Scalar(1, 2));
  CHECK(chebyshev_kind(4, 3).beta[0] == Scalar(-1, 2));
  CHECK_THROWS_AS(chebyshev_kind(1, 3), DomainError);
}

TEST_CASE("parameter domain") {
  CHECK_THROWS_AS(jacobi_recurrence({Scalar(-1), Scalar(0)}, 3), DomainError);
  CHECK_THROWS_AS(jacobi_recurrence({Scalar(0), Scalar(-3, 2)}, 3), DomainError);
  CHECK_THROWS_AS(jacobi_recurrence({Scalar(0), Scalar(0)}, 0), DomainError);
}

TEST_CASE("cancelled start values agree with the general formulas where defined") {
  oracle::Rng rng(21);
  for (int i = 0; i < 60; ++i) {
    const JacobiParams p{oracle::frac(rng.integer(-5, 30), 6), oracle::frac(rng.integer(-5, 30), 6)};
    const Scalar s = p.alpha + p.beta;
    const RecurrencePair rec = jacobi_recurrence(p, 6);
    if (s != 0) {
      CHECK(rec.beta[0] == (p.beta * p.beta - p.alpha * p.alpha) / (s * (s + 2)));
    }
    if (s != -1) {
      const Scalar k = 2 + s;
      CHECK(rec.gamma_at(1) == 4 * (1 + p.alpha) * (1 + p.beta) * (1 + s) / ((k - 1) * k * k * (k + 1)));
    }
    if (p.alpha == p.beta) {
      for (const auto& b : rec.beta) CHECK(b == 0);
    }
    const MomentFunctional m = moments_from_recurrence(rec, 8);
    CHECK(m.moment(1) == rec.beta[0]);
  }
}

TEST_CASE("norm ratios") {
  const JacobiParams half{Scalar(1, 2), Scalar(1, 2)};
  CHECK(jacobi_norm_ratio(half, 0) == 1);
  CHECK(jacobi_norm_ratio(half, 3) == Scalar(1, 64));
  CHECK(jacobi_norm_ratio(chebyshev_params(3), 2) == Scalar(1, 16));
  // The Gamma form at 1e-10 relative tolerance.
  oracle::Rng rng(22);
  for (int i = 0; i < 40; ++i) {
    const JacobiParams p{oracle::frac(rng.integer(-5, 30), 6), oracle::frac(rng.integer(-5, 30), 6)};
    for (std::size_t n = 0; n <= 12; ++n) CHECK(jacobi_norm_ratio_discrepancy(p, n) <= 1e-10);
  }
}
