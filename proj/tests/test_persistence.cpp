// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "ktmod/oracles.hpp"
#include "ktmod/persistence.hpp"

using namespace ktmod;

namespace {
const FieldSpec kGf2 = FieldSpec::gf(2);
const FieldSpec kGf3 = FieldSpec::gf(3);
const FieldSpec kGf5 = FieldSpec::gf(5);
const FieldSpec kQ = FieldSpec::rationals();

FilteredComplex complex_of(
    std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> simplices) {
  std::vector<Simplex> list;
  for (auto& [vertices, time] : simplices) {
    list.push_back(Simplex{vertices, time});
  }
  return FilteredComplex::from_simplices(std::move(list));
}

FilteredComplex triangle() {
  return complex_of({{{0}, 0},
                     {{1}, 0},
                     {{2}, 0},
                     {{0, 1}, 1},
                     {{0, 2}, 1},
                     {{1, 2}, 1},
                     {{0, 1, 2}, 2}});
}

Barcode bars(std::vector<Bar> list) { return Barcode::of(std::move(list)); }
}  // namespace

TEST_CASE("filtration validation") {
  // Missing face.
  CHECK_THROWS_AS(complex_of({{{0, 1}, 0}}), UsageError);
  // Face arrives after its coface.
  CHECK_THROWS_AS(complex_of({{{0}, 1}, {{1}, 0}, {{0, 1}, 0}}), UsageError);
  // Duplicate simplex, including under vertex reordering.
  CHECK_THROWS_AS(complex_of({{{0}, 0}, {{1}, 0}, {{0, 1}, 1}, {{1, 0}, 2}}),
                  UsageError);
  // Duplicate vertex inside one simplex.
  CHECK_THROWS_AS(complex_of({{{0}, 0}, {{0, 0}, 1}}), UsageError);
  CHECK_THROWS_AS(complex_of({{{0}, -1}}), UsageError);
  CHECK_THROWS_AS(complex_of({{{-2}, 0}}), UsageError);
  CHECK_THROWS_AS(complex_of({{{}, 0}}), UsageError);
  CHECK_NOTHROW(complex_of({}));

  const FilteredComplex t = triangle();
  CHECK(t.max_time() == 2);
  CHECK(t.max_dimension() == 2);
  // Unordered vertex lists are canonicalized, not rejected.
  const FilteredComplex swapped = complex_of({{{1}, 0}, {{0}, 0}, {{1, 0}, 1}});
  CHECK(swapped.simplices()[2].vertices == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("triangle persistence module dimensions") {
  const PersistenceModule h1 = homology_persistence_module(triangle(), 1, kGf2);
  CHECK(h1.dims == std::vector<std::size_t>{0, 1, 0});
  REQUIRE(h1.maps.size() == 2);
  CHECK(h1.maps[0].rows() == 1);
  CHECK(h1.maps[0].cols() == 0);
  CHECK(h1.maps[1].rows() == 0);
  CHECK(h1.maps[1].cols() == 1);

  const PersistenceModule h0 = homology_persistence_module(triangle(), 0, kGf2);
  CHECK(h0.dims == std::vector<std::size_t>{3, 1, 1});
}

TEST_CASE("betti numbers at each level") {
  const FilteredComplex t = triangle();
  CHECK(betti_number(t, 0, 0, kGf2) == 3);
  CHECK(betti_number(t, 0, 1, kGf2) == 1);
  CHECK(betti_number(t, 0, 2, kGf2) == 1);
  CHECK(betti_number(t, 1, 0, kGf2) == 0);
  CHECK(betti_number(t, 1, 1, kGf2) == 1);
  CHECK(betti_number(t, 1, 2, kGf2) == 0);
  CHECK(betti_number(t, 2, 2, kGf2) == 0);
}

TEST_CASE("triangle barcodes") {
  CHECK(persistent_homology(triangle(), 1, kGf2) == bars({{1, 0}}));
  CHECK(persistent_homology(triangle(), 0, kGf2) ==
        bars({{0, 0}, {0, 0}, {0, kInfinity}}));
  CHECK(persistent_homology(triangle(), 2, kGf2).empty());
}

TEST_CASE("tiny complexes") {
  CHECK(persistent_homology(complex_of({{{0}, 0}}), 0, kGf2) ==
        bars({{0, kInfinity}}));
  const FilteredComplex empty = complex_of({});
  const PersistenceModule m = homology_persistence_module(empty, 0, kGf2);
  CHECK(m.dims == std::vector<std::size_t>{0});
  CHECK(persistent_homology(empty, 3, kQ).empty());

  // Two vertices joined one stage later: one class dies on the merge.
  const FilteredComplex merge = complex_of({{{0}, 0}, {{1}, 0}, {{0, 1}, 1}});
  CHECK(persistent_homology(merge, 0, kGf2) ==
        bars({{0, 0}, {0, kInfinity}}));

  // Hollow triangle born at stage 1, never filled.
  const FilteredComplex circle = complex_of(
      {{{0}, 0}, {{1}, 0}, {{2}, 0}, {{0, 1}, 1}, {{0, 2}, 1}, {{1, 2}, 1}});
  CHECK(persistent_homology(circle, 1, kGf5) == bars({{1, kInfinity}}));
}

TEST_CASE("barcode is the shifted signature") {
  const GradedSignature sig = GradedSignature::of({
      {0, TorsionExponent::infinity()},
      {0, TorsionExponent::finite(2)},
      {1, TorsionExponent::finite(3)},
  });
  CHECK(barcode_from_signature(sig) ==
        bars({{0, 1}, {0, kInfinity}, {1, 2}}));
  CHECK(barcode_from_signature(GradedSignature()).empty());
}

TEST_CASE("bar lifetimes") {
  CHECK(death_stage(Bar{0, 1}) == 2);
  CHECK(death_stage(Bar{3, 0}) == 4);
  CHECK(death_stage(Bar{2, kInfinity}) == kInfinity);

  const Barcode bc = bars({{0, 1}, {2, kInfinity}});
  CHECK(bars_alive_at(bc, 0) == 1);
  CHECK(bars_alive_at(bc, 1) == 1);
  CHECK(bars_alive_at(bc, 2) == 1);  // first died, second just born
  CHECK(bars_alive_at(bc, 5) == 1);
  CHECK(bars_alive_at(bc, -1) == 0);
}

TEST_CASE("barcodes are canonically ordered multisets") {
  const Barcode bc = bars({{1, kInfinity}, {0, 2}, {0, 1}, {0, 1}});
  REQUIRE(bc.size() == 4);
  CHECK(bc.bars()[0] == Bar{0, 1});
  CHECK(bc.bars()[1] == Bar{0, 1});
  CHECK(bc.bars()[2] == Bar{0, 2});
  CHECK(bc.bars()[3] == Bar{1, kInfinity});
}

TEST_CASE("alive bar counts equal betti numbers across the corpus") {
  const PersistenceReport report = persistence_consistency_check(kGf3);
  CHECK(report.complexes >= 10);
  CHECK(report.comparisons > 0);
  INFO(report.first_issue);
  CHECK(report.mismatches == 0);
}

TEST_CASE("euler characteristic balances at every level") {
  for (const auto& [name, complex] : sample_filtrations()) {
    CAPTURE(name);
    for (std::int64_t level = 0; level <= complex.max_time(); ++level) {
      std::int64_t homological = 0;
      for (int q = 0; q <= complex.max_dimension(); ++q) {
        const std::int64_t sign = (q % 2 == 0) ? 1 : -1;
        homological += sign * betti_number(complex, q, level, kGf2);
      }
      std::int64_t combinatorial = 0;
      for (const Simplex& s : complex.simplices()) {
        if (s.time > level) continue;
        combinatorial += (s.dimension() % 2 == 0) ? 1 : -1;
      }
      CAPTURE(level);
      CHECK(homological == combinatorial);
    }
  }
}

TEST_CASE("graph barcodes are independent of the field") {
  for (const auto& [name, complex] : sample_filtrations()) {
    CAPTURE(name);
    const int top = complex.max_dimension() <= 1 ? 1 : 0;
    for (int q = 0; q <= top; ++q) {
      const Barcode over2 = persistent_homology(complex, q, kGf2);
      CHECK(over2 == persistent_homology(complex, q, kGf5));
      CHECK(over2 == persistent_homology(complex, q, kQ));
    }
  }
}
