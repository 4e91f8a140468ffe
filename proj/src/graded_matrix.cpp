// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#include "ktmod/graded_matrix.hpp"

#include <set>
#include <utility>

namespace ktmod {
namespace {

void check_degree_vector(const DegreeVec& degs, const char* which) {
  for (std::size_t i = 0; i < degs.size(); ++i) {
    if (degs[i] < 0) {
      throw DegreeOrderError(std::string(which) + " degree " +
                             std::to_string(i + 1) + " is negative (" +
                             std::to_string(degs[i]) + ")");
    }
    if (i > 0 && degs[i] < degs[i - 1]) {
      throw DegreeOrderError(std::string(which) + " degrees must be weakly " +
                             "increasing; position " + std::to_string(i + 1) +
                             " (" + std::to_string(degs[i]) + ") drops below " +
                             std::to_string(degs[i - 1]));
    }
  }
}

}  // namespace

GradedMatrix::GradedMatrix(FieldSpec field, DegreeVec row_degrees,
                           DegreeVec col_degrees, Matrix<Term> entries)
    : field_(field),
      row_degrees_(std::move(row_degrees)),
      col_degrees_(std::move(col_degrees)),
      entries_(std::move(entries)) {
  if (entries_.rows() != row_degrees_.size() ||
      entries_.cols() != col_degrees_.size()) {
    throw UsageError("entry matrix is " + std::to_string(entries_.rows()) +
                     "x" + std::to_string(entries_.cols()) +
                     " but degree vectors give " +
                     std::to_string(row_degrees_.size()) + "x" +
                     std::to_string(col_degrees_.size()));
  }
  check_degree_vector(row_degrees_, "row");
  check_degree_vector(col_degrees_, "column");
  for (std::size_t k = 0; k < cols(); ++k) validate_column(k);
}

GradedMatrix GradedMatrix::zero(FieldSpec field, DegreeVec row_degrees,
                                DegreeVec col_degrees) {
  Matrix<Term> entries(row_degrees.size(), col_degrees.size(),
                       Term::zero(field));
  return GradedMatrix(field, std::move(row_degrees), std::move(col_degrees),
                      std::move(entries));
}

void GradedMatrix::validate_column(std::size_t k) const {
  for (std::size_t j = 0; j < rows(); ++j) {
    const Term& t = entries_(j, k);
    if (t.field() != field_) {
      throw FieldMismatchError("entry at (" + std::to_string(j + 1) + "," +
                               std::to_string(k + 1) + ") lies in " +
                               t.field().name() + ", matrix is over " +
                               field_.name());
    }
    if (t.is_zero()) continue;
    const std::int64_t expected = col_degrees_[k] - row_degrees_[j];
    if (t.degree() != expected) {
      throw GradednessError(
          "entry at (" + std::to_string(j + 1) + "," + std::to_string(k + 1) +
          ") has degree " + std::to_string(t.degree()) + ", the degree law " +
          "requires " + std::to_string(expected));
    }
  }
}

void GradedMatrix::check_col(std::size_t k, const char* what) const {
  if (k >= cols()) {
    throw UsageError(std::string(what) + ": column " + std::to_string(k + 1) +
                     " out of range (matrix has " + std::to_string(cols()) +
                     " columns)");
  }
}

void GradedMatrix::check_row(std::size_t j, const char* what) const {
  if (j >= rows()) {
    throw UsageError(std::string(what) + ": row " + std::to_string(j + 1) +
                     " out of range (matrix has " + std::to_string(rows()) +
                     " rows)");
  }
}

const Term& GradedMatrix::at(std::size_t j, std::size_t k) const {
  check_row(j, "at");
  check_col(k, "at");
  return entries_(j, k);
}

std::optional<std::size_t> GradedMatrix::low(std::size_t k) const {
  check_col(k, "low");
  for (std::size_t j = rows(); j-- > 0;) {
    if (!entries_(j, k).is_zero()) return j;
  }
  return std::nullopt;
}

void GradedMatrix::col_axpy(std::size_t target, std::size_t source,
                            const Term& factor) {
  check_col(target, "col_axpy");
  check_col(source, "col_axpy");
  if (target == source) {
    throw UsageError("col_axpy: target and source columns coincide");
  }
  if (factor.field() != field_) {
    throw FieldMismatchError("col_axpy: factor lies in " +
                             factor.field().name() + ", matrix is over " +
                             field_.name());
  }
  if (factor.is_zero()) return;
  const std::int64_t expected = col_degrees_[target] - col_degrees_[source];
  if (factor.degree() != expected) {
    throw GradednessError("col_axpy: factor degree " +
                          std::to_string(factor.degree()) +
                          " breaks the degree law, need " +
                          std::to_string(expected));
  }
  for (std::size_t j = 0; j < rows(); ++j) {
    entries_(j, target) = term_sub_aligned(
        entries_(j, target), term_mul(factor, entries_(j, source)));
  }
  validate_column(target);
}

void GradedMatrix::row_axpy(std::size_t target, std::size_t source,
                            const Term& factor) {
  check_row(target, "row_axpy");
  check_row(source, "row_axpy");
  if (target == source) {
    throw UsageError("row_axpy: target and source rows coincide");
  }
  if (factor.field() != field_) {
    throw FieldMismatchError("row_axpy: factor lies in " +
                             factor.field().name() + ", matrix is over " +
                             field_.name());
  }
  if (factor.is_zero()) return;
  const std::int64_t expected = row_degrees_[source] - row_degrees_[target];
  if (factor.degree() != expected) {
    throw GradednessError("row_axpy: factor degree " +
                          std::to_string(factor.degree()) +
                          " breaks the degree law, need " +
                          std::to_string(expected));
  }
  for (std::size_t k = 0; k < cols(); ++k) {
    entries_(target, k) = term_sub_aligned(
        entries_(target, k), term_mul(factor, entries_(source, k)));
  }
}

void GradedMatrix::scale_col(std::size_t k, const FieldElement& unit) {
  check_col(k, "scale_col");
  if (unit.field() != field_) {
    throw FieldMismatchError("scale_col: unit lies in " + unit.field().name() +
                             ", matrix is over " + field_.name());
  }
  if (unit.is_zero()) throw UsageError("scale_col: unit must be nonzero");
  for (std::size_t j = 0; j < rows(); ++j) {
    const Term& t = entries_(j, k);
    entries_(j, k) = Term::monomial(unit * t.coeff(), t.degree());
  }
}

void GradedMatrix::scale_row(std::size_t j, const FieldElement& unit) {
  check_row(j, "scale_row");
  if (unit.field() != field_) {
    throw FieldMismatchError("scale_row: unit lies in " + unit.field().name() +
                             ", matrix is over " + field_.name());
  }
  if (unit.is_zero()) throw UsageError("scale_row: unit must be nonzero");
  for (std::size_t k = 0; k < cols(); ++k) {
    const Term& t = entries_(j, k);
    entries_(j, k) = Term::monomial(unit * t.coeff(), t.degree());
  }
}

void GradedMatrix::swap_cols(std::size_t k1, std::size_t k2) {
  check_col(k1, "swap_cols");
  check_col(k2, "swap_cols");
  if (col_degrees_[k1] != col_degrees_[k2]) {
    throw DegreeOrderError("swap_cols: columns " + std::to_string(k1 + 1) +
                           " and " + std::to_string(k2 + 1) +
                           " have different degrees");
  }
  for (std::size_t j = 0; j < rows(); ++j) {
    std::swap(entries_(j, k1), entries_(j, k2));
  }
}

void GradedMatrix::swap_rows(std::size_t j1, std::size_t j2) {
  check_row(j1, "swap_rows");
  check_row(j2, "swap_rows");
  if (row_degrees_[j1] != row_degrees_[j2]) {
    throw DegreeOrderError("swap_rows: rows " + std::to_string(j1 + 1) +
                           " and " + std::to_string(j2 + 1) +
                           " have different degrees");
  }
  for (std::size_t k = 0; k < cols(); ++k) {
    std::swap(entries_(j1, k), entries_(j2, k));
  }
}

bool is_reduced(const GradedMatrix& a) {
  std::set<std::size_t> lows;
  for (std::size_t k = 0; k < a.cols(); ++k) {
    if (auto l = a.low(k)) {
      if (!lows.insert(*l).second) return false;
    }
  }
  return true;
}

GradedMatrix multiply(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.field() != b.field()) {
    throw FieldMismatchError("multiply: factors lie over different fields");
  }
  if (a.col_degrees() != b.row_degrees()) {
    throw UsageError(
        "multiply: inner degree vectors disagree, matrices not composable");
  }
  Matrix<Term> out(a.rows(), b.cols(), Term::zero(a.field()));
  for (std::size_t k = 0; k < b.cols(); ++k) {
    for (std::size_t j = 0; j < a.rows(); ++j) {
      Term acc = Term::zero(a.field());
      for (std::size_t t = 0; t < a.cols(); ++t) {
        const Term& left = a.at(j, t);
        const Term& right = b.at(t, k);
        if (left.is_zero() || right.is_zero()) continue;
        acc = term_add_aligned(acc, term_mul(left, right));
      }
      out(j, k) = acc;
    }
  }
  return GradedMatrix(a.field(), a.row_degrees(), b.col_degrees(),
                      std::move(out));
}

GradedMatrix identity_matrix(FieldSpec field, DegreeVec degrees) {
  Matrix<Term> entries(degrees.size(), degrees.size(), Term::zero(field));
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    entries(i, i) = Term::one(field);
  }
  return GradedMatrix(field, degrees, degrees, std::move(entries));
}

GradedMatrix graded_matrix_from_entries(
    FieldSpec field, DegreeVec row_degrees, DegreeVec col_degrees,
    const std::vector<TermEntry>& entries) {
  Matrix<Term> m(row_degrees.size(), col_degrees.size(), Term::zero(field));
  for (const TermEntry& e : entries) {
    if (e.row >= row_degrees.size() || e.col >= col_degrees.size()) {
      throw UsageError("entry index (" + std::to_string(e.row + 1) + "," +
                       std::to_string(e.col + 1) + ") out of range for a " +
                       std::to_string(row_degrees.size()) + "x" +
                       std::to_string(col_degrees.size()) + " matrix");
    }
    if (!m(e.row, e.col).is_zero()) {
      throw UsageError("duplicate entry at (" + std::to_string(e.row + 1) +
                       "," + std::to_string(e.col + 1) + ")");
    }
    m(e.row, e.col) = Term::monomial(e.coeff, e.degree);
  }
  return GradedMatrix(field, std::move(row_degrees), std::move(col_degrees),
                      std::move(m));
}

}  // namespace ktmod
