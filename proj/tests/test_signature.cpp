// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "ktmod/signature.hpp"

using namespace ktmod;

TEST_CASE("torsion exponents are positive or infinite") {
  CHECK_THROWS_AS(TorsionExponent::finite(0), UsageError);
  CHECK_THROWS_AS(TorsionExponent::finite(-2), UsageError);
  CHECK(TorsionExponent::finite(3).value() == 3);
  CHECK(TorsionExponent::infinity().is_infinite());
  CHECK_THROWS_AS(TorsionExponent::infinity().value(), UsageError);
  CHECK(TorsionExponent::finite(3) < TorsionExponent::finite(4));
  CHECK(TorsionExponent::finite(999) < TorsionExponent::infinity());
  CHECK(TorsionExponent::finite(2).str() == "2");
  CHECK(TorsionExponent::infinity().str() == "inf");
}

TEST_CASE("signatures are canonical multisets") {
  const GradedSignature sig = GradedSignature::of({
      {1, TorsionExponent::finite(2)},
      {0, TorsionExponent::infinity()},
      {0, TorsionExponent::finite(1)},
  });
  REQUIRE(sig.size() == 3);
  CHECK(sig.summands()[0] == Summand{0, TorsionExponent::finite(1)});
  CHECK(sig.summands()[1] == Summand{0, TorsionExponent::infinity()});
  CHECK(sig.summands()[2] == Summand{1, TorsionExponent::finite(2)});
  CHECK(sig.str() == "{(0,1), (0,inf), (1,2)}");
  CHECK(GradedSignature().str() == "{}");

  GradedSignature incremental;
  incremental.add({1, TorsionExponent::finite(2)});
  incremental.add({0, TorsionExponent::finite(1)});
  incremental.add({0, TorsionExponent::infinity()});
  CHECK(incremental == sig);

  // Multiset semantics: repeated summands stay distinct.
  const GradedSignature twice = GradedSignature::of({
      {0, TorsionExponent::finite(1)},
      {0, TorsionExponent::finite(1)},
  });
  CHECK(twice.size() == 2);
  CHECK(twice != GradedSignature::of({{0, TorsionExponent::finite(1)}}));
}

TEST_CASE("hilbert dimensions of a signature") {
  const GradedSignature free0 =
      GradedSignature::of({{0, TorsionExponent::infinity()}});
  for (std::int64_t d = 0; d <= 5; ++d) {
    CHECK(signature_hilbert_dim(free0, d) == 1);
  }
  CHECK(signature_hilbert_dim(free0, -1) == 0);

  // Summand (1, 2) lives exactly in degrees 1 and 2.
  const GradedSignature t =
      GradedSignature::of({{1, TorsionExponent::finite(2)}});
  CHECK(signature_hilbert_dim(t, 0) == 0);
  CHECK(signature_hilbert_dim(t, 1) == 1);
  CHECK(signature_hilbert_dim(t, 2) == 1);
  CHECK(signature_hilbert_dim(t, 3) == 0);

  const GradedSignature both = signature_union(free0, t);
  CHECK(signature_hilbert_dim(both, 2) == 2);
  CHECK(signature_hilbert_dim(both, 3) == 1);
}

TEST_CASE("union is multiset union") {
  const GradedSignature a =
      GradedSignature::of({{0, TorsionExponent::finite(1)}});
  const GradedSignature b = GradedSignature::of({
      {0, TorsionExponent::finite(1)},
      {2, TorsionExponent::infinity()},
  });
  const GradedSignature u = signature_union(a, b);
  REQUIRE(u.size() == 3);
  CHECK(u.summands()[0] == Summand{0, TorsionExponent::finite(1)});
  CHECK(u.summands()[1] == Summand{0, TorsionExponent::finite(1)});
  CHECK(u.summands()[2] == Summand{2, TorsionExponent::infinity()});
  CHECK(signature_union(GradedSignature(), a) == a);
}
