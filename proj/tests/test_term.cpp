// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "ktmod/term.hpp"
#include "support.hpp"

using namespace ktmod;
using ktmod::test::tm;

namespace {
const FieldSpec kGf5 = FieldSpec::gf(5);
const FieldSpec kQ = FieldSpec::rationals();
}  // namespace

TEST_CASE("monomial construction canonicalizes") {
  CHECK_THROWS_AS(tm(kGf5, 1, -1), UsageError);
  const Term z = tm(kGf5, 0, 7);  // zero coefficient drops the degree
  CHECK(z.is_zero());
  CHECK(z.degree() == 0);
  CHECK(z == Term::zero(kGf5));
  CHECK(Term::one(kGf5).str() == "1");
}

TEST_CASE("term rendering") {
  CHECK(Term::zero(kQ).str() == "0");
  CHECK(tm(kQ, 1, 0).str() == "1");
  CHECK(tm(kQ, 1, 1).str() == "T");
  CHECK(tm(kQ, 1, 4).str() == "T^4");
  CHECK(tm(kGf5, 2, 3).str() == "2*T^3");
  CHECK(Term::monomial(FieldElement::parse(kQ, "-1/2"), 1).str() == "-1/2*T");
}

TEST_CASE("term multiplication adds degrees") {
  CHECK(term_mul(tm(kGf5, 2, 1), tm(kGf5, 3, 2)) == tm(kGf5, 1, 3));
  CHECK(term_mul(tm(kGf5, 2, 1), Term::zero(kGf5)).is_zero());
  CHECK_THROWS_AS(term_mul(tm(kGf5, 1, 0), tm(kQ, 1, 0)),
                  FieldMismatchError);
}

TEST_CASE("term division is exact and degree-guarded") {
  CHECK(term_div(tm(kQ, 1, 3), tm(kQ, 2, 1)) ==
        Term::monomial(FieldElement::parse(kQ, "1/2"), 2));
  CHECK(term_div(Term::zero(kQ), tm(kQ, 2, 1)).is_zero());
  CHECK_THROWS_AS(term_div(tm(kQ, 1, 1), tm(kQ, 1, 3)), NonDivisibleError);
  CHECK_THROWS_AS(term_div(tm(kQ, 1, 1), Term::zero(kQ)),
                  DivisionByZeroError);
}

TEST_CASE("aligned sums require one degree") {
  CHECK(term_add_aligned(tm(kGf5, 2, 1), tm(kGf5, 3, 1)).is_zero());
  CHECK(term_add_aligned(tm(kGf5, 2, 1), Term::zero(kGf5)) == tm(kGf5, 2, 1));
  CHECK(term_sub_aligned(Term::zero(kGf5), tm(kGf5, 2, 1)) == tm(kGf5, 3, 1));
  CHECK(term_sub_aligned(tm(kQ, 1, 2), tm(kQ, 1, 2)).is_zero());
  CHECK_THROWS_AS(term_add_aligned(tm(kGf5, 2, 1), tm(kGf5, 3, 2)),
                  InternalError);
}

TEST_CASE("negation") {
  CHECK(term_neg(tm(kGf5, 2, 4)) == tm(kGf5, 3, 4));
  CHECK(term_neg(Term::zero(kQ)).is_zero());
}
