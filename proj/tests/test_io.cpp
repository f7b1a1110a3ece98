#include <doctest.h>

#include <fstream>

#include "orthorel/casebook.hpp"
#include "orthorel/errors.hpp"
#include "orthorel/io.hpp"
#include "support/oracles.hpp"

using namespace orthorel;
using oracle::frac;

TEST_CASE("scalars") {
  CHECK(scalar_json(frac(-3, 4)) == "-3/4");
  CHECK(scalar_json(Scalar(5)) == "5");
  CHECK(scalar_json(frac(1, 4), NumberMode::Float).get<double>() == doctest::Approx(0.25));
  CHECK(scalar_from_json(json("6/8")) == frac(3, 4));
  CHECK(scalar_from_json(json(7)) == 7);
  CHECK_THROWS_AS(scalar_from_json(json("1/0")), ParseError);
  CHECK_THROWS_AS(scalar_from_json(json("abc")), ParseError);
  CHECK_THROWS_AS(scalar_from_json(json(0.5)), ParseError);
}

TEST_CASE("round trips") {
  oracle::Rng rng(41);
  for (int i = 0; i < 20; ++i) {
    const RecurrencePair rec = rng.recurrence(6);
    CHECK(recurrence_from_json(to_json(rec)) == rec);
    const Polynomial p = rng.poly(4);
    CHECK(polynomial_from_json(to_json(p)) == p);
    const MomentFunctional f = moments_from_recurrence(rec, 8);
    CHECK(functional_from_json(to_json(f)) == f);
    const Relation23 rel = oracle::random_relation(rng, 6);
    CHECK(relation_from_json(to_json(rel)) == rel);
    const FunctionalRelation fr{rng.nonzero(), rng.rational(), rng.rational(), rng.rational()};
    CHECK(functional_relation_from_json(to_json(fr)) == fr);
  }
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(recurrence_from_json(json::parse(R"({"beta": ["0"]})")), ParseError);
  CHECK_THROWS_AS(relation_from_json(json::parse(R"({"r": ["0"], "s": ["0"], "t": "x"})")), ParseError);
  CHECK_THROWS_WITH_AS(relation_from_json(json::parse(R"({"r": ["0","0"], "s": ["0","0"], "t": ["0","1"]})")),
                       "convention r0=s0=t0=t1=0 violated", DomainError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), ParseError);
}

TEST_CASE("csv leaves missing entries blank") {
  PartialSeq a(3);
  a[1] = frac(1, 2);
  const std::string csv = to_csv({{"a", a}, {"r", to_partial({Scalar(0), Scalar(1), Scalar(2)})}});
  CHECK(csv == "n,a,r\n0,,0\n1,1/2,1\n2,,2\n");
}

TEST_CASE("verdict json shape") {
  const ChebyshevCaseReport rep = chebyshev_case(8);
  const json v = to_json(*rep.by_constancy);
  CHECK(v["is_mops"] == true);
  CHECK(v["constants"]["A"] == "1");
  CHECK(v["constants"]["B"] == "0");
  CHECK(v["constants"]["C"] == "1");
  CHECK(v["failures"].empty());

  Relation23 bumped = rep.rel;
  bumped.t[4] += 1;
  const json f = to_json(check_by_equations(rep.p_rec, bumped, 8));
  CHECK(f["is_mops"] == false);
  CHECK(f["failures"][0].contains("condition"));
  CHECK(f["failures"][0].contains("n"));

  const json whole = to_json(rep);
  CHECK(whole["ok"] == true);
  CHECK(whole["tag"] == "NonDegenerate23");
}
