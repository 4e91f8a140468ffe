// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "ktmod/linalg.hpp"
#include "support.hpp"

using namespace ktmod;
using ktmod::test::fe;

namespace {

KMatrix km(FieldSpec f, std::vector<std::vector<std::int64_t>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  KMatrix m = kmatrix_zero(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = fe(f, rows[i][j]);
  }
  return m;
}

Vec vec(FieldSpec f, std::vector<std::int64_t> vals) {
  Vec v;
  for (std::int64_t x : vals) v.push_back(fe(f, x));
  return v;
}

}  // namespace

TEST_CASE("span solver tracks dependencies with exact coefficients") {
  const FieldSpec f = FieldSpec::gf(5);
  SpanSolver solver(f, 3);
  CHECK(!solver.insert(vec(f, {1, 2, 0})).has_value());
  const auto dep = solver.insert(vec(f, {2, 4, 0}));
  REQUIRE(dep.has_value());
  REQUIRE(dep->size() == 1);
  CHECK((*dep)[0] == fe(f, 2));  // (2,4,0) = 2 * (1,2,0)
  CHECK(!solver.insert(vec(f, {0, 0, 1})).has_value());
  CHECK(solver.rank() == 2);
  CHECK(solver.seen() == 3);

  const auto coords = solver.express(vec(f, {1, 2, 1}));
  REQUIRE(coords.has_value());
  CHECK(*coords == vec(f, {1, 0, 1}));
  CHECK(!solver.express(vec(f, {0, 1, 0})).has_value());
}

TEST_CASE("span solver over the rationals") {
  const FieldSpec q = FieldSpec::rationals();
  SpanSolver solver(q, 2);
  Vec half = {FieldElement::parse(q, "1/2"), FieldElement::parse(q, "1/3")};
  Vec third = {FieldElement::parse(q, "1/4"), FieldElement::parse(q, "1/6")};
  CHECK(!solver.insert(half).has_value());
  const auto dep = solver.insert(third);  // third == (1/2) * half
  REQUIRE(dep.has_value());
  CHECK((*dep)[0] == FieldElement::parse(q, "1/2"));
}

TEST_CASE("column space ranks") {
  const FieldSpec f = FieldSpec::gf(7);
  CHECK(column_space_rank(f, kmatrix_identity(f, 3)) == 3);
  CHECK(column_space_rank(f, kmatrix_zero(f, 3, 2)) == 0);
  CHECK(column_space_rank(f, km(f, {{1, 2}, {2, 4}})) == 1);
  CHECK(column_space_rank(f, kmatrix_zero(f, 0, 4)) == 0);

  const FieldSpec q = FieldSpec::rationals();
  KMatrix m = kmatrix_zero(q, 2, 2);
  m(0, 0) = FieldElement::parse(q, "1/2");
  m(0, 1) = FieldElement::parse(q, "1/3");
  m(1, 0) = FieldElement::parse(q, "1/4");
  m(1, 1) = FieldElement::parse(q, "1/6");
  CHECK(column_space_rank(q, m) == 1);  // det = 1/12 - 1/12 = 0
}

TEST_CASE("kernel basis solves A x = 0") {
  const FieldSpec q = FieldSpec::rationals();
  const KMatrix a = km(q, {{1, 2}, {2, 4}});
  const KMatrix k = kernel_basis(q, a);
  REQUIRE(k.rows() == 2);
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0) == fe(q, -2));
  CHECK(k(1, 0) == fe(q, 1));

  CHECK(kernel_basis(q, kmatrix_identity(q, 2)).cols() == 0);
  // A zero matrix has full kernel with unit coordinates.
  const KMatrix z = kernel_basis(q, kmatrix_zero(q, 2, 3));
  REQUIRE(z.cols() == 3);
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(z(i, j) == (i == j ? fe(q, 1) : fe(q, 0)));
    }
  }
}
