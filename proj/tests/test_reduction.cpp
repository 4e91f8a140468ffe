// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "ktmod/oracles.hpp"
#include "ktmod/reduction.hpp"
#include "support.hpp"

using namespace ktmod;
using ktmod::test::tm;
using ktmod::test::worked_example;

namespace {
const FieldSpec kGf2 = FieldSpec::gf(2);
const FieldSpec kGf5 = FieldSpec::gf(5);
const FieldSpec kQ = FieldSpec::rationals();

GradedSignature sig(std::vector<Summand> s) {
  return GradedSignature::of(std::move(s));
}
}  // namespace

TEST_CASE("worked example reduces in one operation") {
  for (FieldSpec f : {kGf2, kGf5, kQ}) {
    CAPTURE(f.name());
    const GradedMatrix a = worked_example(f);
    const ReductionResult r = reduce(a);
    CHECK(is_reduced(r.reduced));
    CHECK(r.axpy_count == 1);
    CHECK(r.passes == 1);
    // Second column is wiped, first is untouched.
    CHECK(r.reduced.at(0, 0) == tm(f, 1, 1));
    CHECK(r.reduced.at(1, 0) == tm(f, 1, 0));
    CHECK(r.reduced.at(0, 1).is_zero());
    CHECK(r.reduced.at(1, 1).is_zero());
    REQUIRE(r.low_map.size() == 1);
    CHECK(r.low_map.at(0) == 1);
    // The recorded transform reproduces the reduction: A * B = A'.
    CHECK(multiply(a, r.transform) == r.reduced);
    // B = [[1, -T], [0, 1]].
    CHECK(r.transform.at(0, 0) == tm(f, 1, 0));
    CHECK(r.transform.at(0, 1) == term_neg(tm(f, 1, 1)));
    CHECK(r.transform.at(1, 0).is_zero());
    CHECK(r.transform.at(1, 1) == tm(f, 1, 0));
    // The quotient is free on the degree-0 generator.
    CHECK(quotient_signature(r.reduced) ==
          sig({{0, TorsionExponent::infinity()}}));
  }
}

TEST_CASE("quotient signature demands a reduced input") {
  CHECK_THROWS_AS(quotient_signature(worked_example(kGf2)), UsageError);
}

TEST_CASE("reduction with a surviving second column") {
  // [[2T, T], [1, 1]] over GF(5): both lows at row 2, the update leaves
  // -T = 4T in the corner, so the new low of column 2 is row 1.
  const GradedMatrix a = graded_matrix_from_entries(
      kGf5, {0, 1}, {1, 1},
      {{0, 0, FieldElement::from_int(kGf5, 2), 1},
       {0, 1, FieldElement::from_int(kGf5, 1), 1},
       {1, 0, FieldElement::from_int(kGf5, 1), 0},
       {1, 1, FieldElement::from_int(kGf5, 1), 0}});
  const ReductionResult r = reduce(a);
  CHECK(r.axpy_count == 1);
  CHECK(r.reduced.at(0, 0) == tm(kGf5, 2, 1));
  CHECK(r.reduced.at(1, 0) == tm(kGf5, 1, 0));
  CHECK(r.reduced.at(0, 1) == tm(kGf5, 4, 1));
  CHECK(r.reduced.at(1, 1).is_zero());
  CHECK(r.low_map.at(0) == 1);
  CHECK(r.low_map.at(1) == 0);
  // Both generators are consumed: one exponent-0 drop, one (0, 1) summand.
  CHECK(quotient_signature(r.reduced) ==
        sig({{0, TorsionExponent::finite(1)}}));
  CHECK(module_hilbert_dim(a, 0) == 1);
  CHECK(module_hilbert_dim(a, 1) == 0);
  CHECK(module_hilbert_dim(a, 2) == 0);
}

TEST_CASE("single torsion column") {
  const GradedMatrix a = graded_matrix_from_entries(
      kQ, {0}, {2}, {{0, 0, FieldElement::one(kQ), 2}});
  const ReductionResult r = reduce(a);
  CHECK(r.axpy_count == 0);
  CHECK(r.reduced == a);
  CHECK(quotient_signature(r.reduced) ==
        sig({{0, TorsionExponent::finite(2)}}));
}

TEST_CASE("degenerate shapes") {
  const GradedMatrix empty = GradedMatrix::zero(kGf2, {}, {});
  CHECK(reduce(empty).reduced == empty);
  CHECK(quotient_signature(empty) == GradedSignature());

  const GradedMatrix no_cols = GradedMatrix::zero(kGf2, {0, 1, 2}, {});
  CHECK(quotient_signature(reduce(no_cols).reduced) ==
        sig({{0, TorsionExponent::infinity()},
             {1, TorsionExponent::infinity()},
             {2, TorsionExponent::infinity()}}));

  const GradedMatrix no_rows = GradedMatrix::zero(kGf2, {}, {3, 4});
  CHECK(quotient_signature(reduce(no_rows).reduced) == GradedSignature());

  const GradedMatrix zeros = GradedMatrix::zero(kGf2, {0, 2}, {1, 3});
  CHECK(quotient_signature(reduce(zeros).reduced) ==
        sig({{0, TorsionExponent::infinity()},
             {2, TorsionExponent::infinity()}}));
}

TEST_CASE("reduce is idempotent on its own output") {
  const GradedMatrix a = worked_example(kGf5);
  const ReductionResult once = reduce(a);
  const ReductionResult twice = reduce(once.reduced);
  CHECK(twice.reduced == once.reduced);
  CHECK(twice.axpy_count == 0);
  CHECK(twice.passes == 1);
}

TEST_CASE("smith normal form of the worked example") {
  const GradedMatrix a = worked_example(kGf2);
  const SmithNormalForm snf = to_smith_normal_form(reduce(a).reduced);
  REQUIRE(snf.rank == 1);
  REQUIRE(snf.diagonal.size() == 1);
  CHECK(snf.diagonal[0] == tm(kGf2, 1, 0));

  const SmithNormalForm minors = elementary_divisors_by_minors(a);
  CHECK(minors.rank == snf.rank);
  CHECK(minors.diagonal == snf.diagonal);
}

TEST_CASE("smith normal form of a torsion presentation") {
  // diag(T^2, T) with compatible degrees; divisors sort as (T, T^2).
  const GradedMatrix a = graded_matrix_from_entries(
      kGf5, {0, 0}, {1, 2},
      {{1, 0, FieldElement::from_int(kGf5, 3), 1},
       {0, 1, FieldElement::from_int(kGf5, 2), 2}});
  const SmithNormalForm snf = to_smith_normal_form(reduce(a).reduced);
  REQUIRE(snf.rank == 2);
  CHECK(snf.diagonal[0] == tm(kGf5, 1, 1));
  CHECK(snf.diagonal[1] == tm(kGf5, 1, 2));
  // Divisibility chain: each entry divides the next.
  CHECK_NOTHROW(term_div(snf.diagonal[1], snf.diagonal[0]));

  const SmithNormalForm minors = elementary_divisors_by_minors(a);
  CHECK(minors.rank == 2);
  CHECK(minors.diagonal == snf.diagonal);
}

TEST_CASE("minors oracle is guarded to small matrices") {
  const GradedMatrix big = GradedMatrix::zero(
      kGf2, {0, 0, 0, 0, 0, 0, 0}, {0});
  CHECK_THROWS_AS(elementary_divisors_by_minors(big), UsageError);
}

TEST_CASE("signatures are invariant under random graded basis changes") {
  CHECK(verify_signature_uniqueness(worked_example(kGf2), 25, 11));
  CHECK(verify_signature_uniqueness(worked_example(kQ), 25, 12));
  const GradedMatrix torsion = graded_matrix_from_entries(
      kGf5, {0, 0}, {1, 2},
      {{1, 0, FieldElement::from_int(kGf5, 3), 1},
       {0, 1, FieldElement::from_int(kGf5, 2), 2}});
  CHECK(verify_signature_uniqueness(torsion, 25, 13));
}

TEST_CASE("small randomized reduction batch stays clean") {
  const ReductionBatchReport report = reduction_batch(kGf5, 20, 401);
  CHECK(report.instances == 20);
  CHECK(report.hilbert_mismatches == 0);
  CHECK(report.transform_failures == 0);
  CHECK(report.termination_violations == 0);
  INFO(report.first_issue);
  CHECK(report.first_issue.empty());
}
