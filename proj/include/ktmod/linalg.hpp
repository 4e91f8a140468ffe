// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ktmod/field.hpp"
#include "ktmod/matrix.hpp"

namespace ktmod {

using Vec = std::vector<FieldElement>;
using KMatrix = Matrix<FieldElement>;

KMatrix kmatrix_zero(FieldSpec f, std::size_t rows, std::size_t cols);
KMatrix kmatrix_identity(FieldSpec f, std::size_t n);

// Incremental column-space tracker with deterministic pivots (first nonzero
// row, insertion-order reduction). For every stored basis vector it keeps the
// expansion over the columns inserted so far, so dependencies and coordinates
// come out exactly.
class SpanSolver {
 public:
  SpanSolver(FieldSpec f, std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t seen() const { return seen_; }
  std::size_t rank() const { return stored_.size(); }

  // Inserts v as the next column. Returns nullopt when the span grew;
  // otherwise the coefficients x (over the columns inserted before this
  // call) with v == sum x_i * column_i.
  std::optional<Vec> insert(const Vec& v);

  // Coordinates of v over all columns inserted so far, or nullopt when v is
  // outside the span. Coefficients of dependent columns are zero.
  std::optional<Vec> express(const Vec& v) const;

 private:
  struct Stored {
    Vec vec;           // reduced column, pivot normalized to 1
    Vec comb;          // expansion of vec over inserted columns
    std::size_t pivot;  // first nonzero row
  };

  FieldSpec field_;
  std::size_t ambient_;
  std::size_t seen_ = 0;
  std::vector<Stored> stored_;  // in insertion order
};

std::size_t column_space_rank(FieldSpec f, const KMatrix& a);

// Basis of {x : A x == 0} as matrix columns, in the deterministic echelon
// form produced by left-to-right dependency tracking (coefficient 1 at the
// dependent column's own index).
KMatrix kernel_basis(FieldSpec f, const KMatrix& a);

}  // namespace ktmod
