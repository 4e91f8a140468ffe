// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ktmod/graded_matrix.hpp"
#include "ktmod/signature.hpp"

namespace ktmod {

struct ReductionResult {
  GradedMatrix reduced;    // A' = A * transform, pairwise distinct lows
  GradedMatrix transform;  // product of the applied column operations
  // column -> its low row, nonzero columns only (0-based).
  std::map<std::size_t, std::size_t> low_map;
  std::size_t axpy_count = 0;  // column updates performed (bounded by r*s)
  std::size_t passes = 1;      // outer sweeps until the reducedness re-check
};

// Column reduction by graded operations. Deterministic; never swaps or
// scales, so transform is unitriangular up to column degrees.
ReductionResult reduce(const GradedMatrix& a);

// Signature of F / im(A') for a reduced presentation matrix A': one torsion
// summand (row_degree[j], col_degree[k] - row_degree[j]) per nonzero low
// entry (dropping exponent 0), and one free summand (row_degree[j], inf) per
// row that is nobody's low. UsageError when the input is not reduced.
GradedSignature quotient_signature(const GradedMatrix& reduced);

struct SmithNormalForm {
  std::vector<Term> diagonal;  // monic monomials, sorted by degree
  std::size_t rank = 0;
};

// Diagonalizes a reduced matrix by clearing above-low entries with graded
// row operations, then reads off the unit-normalized low entries. The
// diagonal is a divisibility chain because monomials divide by degree.
SmithNormalForm to_smith_normal_form(const GradedMatrix& reduced);

// Independent divisor computation through gcds of i-minors. Exponential in
// the matrix size; guarded to rows, cols <= 6.
SmithNormalForm elementary_divisors_by_minors(const GradedMatrix& a);

// Applies `trials` random batches of graded invertible row and column
// operations (axpys, unit scalings, equal-degree swaps) to a copy of A,
// re-reduces, and compares signatures with the unperturbed one. True when
// every trial agrees.
bool verify_signature_uniqueness(const GradedMatrix& a, std::size_t trials,
                                 std::uint64_t seed);

}  // namespace ktmod
