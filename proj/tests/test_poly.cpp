#include <doctest.h>

#include "orthorel/errors.hpp"
#include "orthorel/poly.hpp"
#include "support/oracles.hpp"

using namespace orthorel;

namespace {
const Polynomial x{Scalar(0), Scalar(1)};
}

TEST_CASE("canonical form trims trailing zeros") {
  CHECK(Polynomial{Scalar(1), Scalar(0), Scalar(0)}.degree() == 0);
  CHECK(Polynomial{Scalar(0)}.is_zero());
  CHECK(Polynomial{}.degree() == -1);
  CHECK(Polynomial::monomial(3).is_monic());
  CHECK_FALSE(Polynomial{Scalar(1), Scalar(2)}.is_monic());
  CHECK_THROWS_AS((void)Polynomial{}.leading(), DomainError);
}

TEST_CASE("addition") {
  CHECK((x + Polynomial::constant(1)) + (-x) == Polynomial::constant(1));
  const Polynomial p{Scalar(2), Scalar(-1), Scalar(5)};
  CHECK(Polynomial{} + p == p);
  CHECK(Polynomial{Scalar(-1, 4), Scalar(0), Scalar(1)} + Polynomial::constant(Scalar(1, 4)) == x * x);
}

TEST_CASE("multiplication") {
  CHECK(Polynomial::linear(1) * Polynomial::linear(-1) == Polynomial{Scalar(-1), Scalar(0), Scalar(1)});
  CHECK(x * (Polynomial::constant(1) + x) == Polynomial{Scalar(0), Scalar(1), Scalar(1)});
  CHECK((Polynomial{} * x).is_zero());
}

TEST_CASE("evaluation") {
  CHECK(eval(x * x - Polynomial::constant(1), 1) == 0);
  CHECK(eval(x + Polynomial::constant(Scalar(1, 2)), Scalar(-1, 2)) == 0);
  CHECK(eval(Polynomial::monomial(3), 2) == 8);
  CHECK(eval(Polynomial{}, 7) == 0);
}

TEST_CASE("simple sets") {
  CHECK(is_simple_set({Polynomial::constant(1), x, x * x - Polynomial::constant(Scalar(1, 4))}));
  CHECK_FALSE(is_simple_set({Polynomial::constant(1), x * x}));
  CHECK_FALSE(is_simple_set({Polynomial::constant(2)}));
}

TEST_CASE("ring axioms and evaluation homomorphism on random inputs") {
  oracle::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const Polynomial p = rng.poly(static_cast<int>(rng.integer(0, 5)));
    const Polynomial q = rng.poly(static_cast<int>(rng.integer(0, 5)));
    const Polynomial r = rng.poly(static_cast<int>(rng.integer(0, 5)));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK(p + q == q + p);
    CHECK((p - p).is_zero());
    if (!p.is_zero() && !q.is_zero()) CHECK((p * q).degree() == p.degree() + q.degree());
    const Scalar at = rng.rational();
    CHECK(eval(p * q, at) == eval(p, at) * eval(q, at));
    CHECK(eval(p + q, at) == eval(p, at) + eval(q, at));
  }
}
