// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ktmod/matrix.hpp"
#include "ktmod/term.hpp"

namespace ktmod {

using DegreeVec = std::vector<std::int64_t>;

// Matrix of homogeneous terms tied to weakly increasing generator (row) and
// relation (column) degrees. A nonzero entry at (j, k) must satisfy
//   col_degree[k] == row_degree[j] + deg(entry),
// so columns are homogeneous elements of the free module the rows span.
// Construction validates the whole law; every mutator preserves it, so an
// invalid instance cannot exist. Indices are 0-based in the API and 1-based
// in error messages and serialized entry lists.
class GradedMatrix {
 public:
  GradedMatrix(FieldSpec field, DegreeVec row_degrees, DegreeVec col_degrees,
               Matrix<Term> entries);
  static GradedMatrix zero(FieldSpec field, DegreeVec row_degrees,
                           DegreeVec col_degrees);

  FieldSpec field() const { return field_; }
  std::size_t rows() const { return entries_.rows(); }
  std::size_t cols() const { return entries_.cols(); }
  const DegreeVec& row_degrees() const { return row_degrees_; }
  const DegreeVec& col_degrees() const { return col_degrees_; }

  const Term& at(std::size_t j, std::size_t k) const;

  // Index of the last nonzero row of column k, or nullopt for a zero column.
  std::optional<std::size_t> low(std::size_t k) const;

  // col_target -= factor * col_source. A zero factor is a no-op; otherwise
  // deg(factor) must equal col_degree[target] - col_degree[source].
  void col_axpy(std::size_t target, std::size_t source, const Term& factor);
  // row_target -= factor * row_source, deg(factor) ==
  // row_degree[source] - row_degree[target].
  void row_axpy(std::size_t target, std::size_t source, const Term& factor);
  void scale_col(std::size_t k, const FieldElement& unit);
  void scale_row(std::size_t j, const FieldElement& unit);
  // Swaps are only degree-preserving between equal degrees.
  void swap_cols(std::size_t k1, std::size_t k2);
  void swap_rows(std::size_t j1, std::size_t j2);

  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
    return a.field_ == b.field_ && a.row_degrees_ == b.row_degrees_ &&
           a.col_degrees_ == b.col_degrees_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const GradedMatrix& a, const GradedMatrix& b) {
    return !(a == b);
  }

 private:
  void check_col(std::size_t k, const char* what) const;
  void check_row(std::size_t j, const char* what) const;
  void validate_column(std::size_t k) const;

  FieldSpec field_;
  DegreeVec row_degrees_;
  DegreeVec col_degrees_;
  Matrix<Term> entries_;
};

// Pairwise distinct lows over the nonzero columns.
bool is_reduced(const GradedMatrix& a);

// Graded matrix product; requires a.col_degrees() == b.row_degrees().
GradedMatrix multiply(const GradedMatrix& a, const GradedMatrix& b);

GradedMatrix identity_matrix(FieldSpec field, DegreeVec degrees);

// Sparse builder: entries as (row, col, coeff, degree), 0-based.
struct TermEntry {
  std::size_t row;
  std::size_t col;
  FieldElement coeff;
  std::int64_t degree;
};
GradedMatrix graded_matrix_from_entries(FieldSpec field, DegreeVec row_degrees,
                                        DegreeVec col_degrees,
                                        const std::vector<TermEntry>& entries);

}  // namespace ktmod
