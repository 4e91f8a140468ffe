// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#include "ktmod/linalg.hpp"

namespace ktmod {

KMatrix kmatrix_zero(FieldSpec f, std::size_t rows, std::size_t cols) {
  return KMatrix(rows, cols, FieldElement::zero(f));
}

KMatrix kmatrix_identity(FieldSpec f, std::size_t n) {
  KMatrix m = kmatrix_zero(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement::one(f);
  return m;
}

SpanSolver::SpanSolver(FieldSpec f, std::size_t ambient)
    : field_(f), ambient_(ambient) {}

std::optional<Vec> SpanSolver::insert(const Vec& v) {
  internal_check(v.size() == ambient_, "SpanSolver: wrong vector length");
  Vec work = v;
  Vec comb(seen_ + 1, FieldElement::zero(field_));
  comb[seen_] = FieldElement::one(field_);
  // Insertion-order reduction: each stored vector is already zero at the
  // pivots of the vectors stored before it, so one forward sweep clears
  // every stored pivot from work.
  for (const Stored& s : stored_) {
    // Copy, not a reference: the sweep below writes work[s.pivot].
    const FieldElement c = work[s.pivot];
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i < ambient_; ++i) {
      if (!s.vec[i].is_zero()) work[i] = work[i] - c * s.vec[i];
    }
    for (std::size_t i = 0; i < s.comb.size(); ++i) {
      if (!s.comb[i].is_zero()) comb[i] = comb[i] - c * s.comb[i];
    }
  }
  std::size_t pivot = ambient_;
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (!work[i].is_zero()) {
      pivot = i;
      break;
    }
  }
  ++seen_;
  if (pivot == ambient_) {
    // Dependent: work == 0 gives v == sum(-comb_i) * column_i for i < seen.
    Vec x(seen_ - 1, FieldElement::zero(field_));
    for (std::size_t i = 0; i + 1 < seen_; ++i) x[i] = -comb[i];
    return x;
  }
  FieldElement lead = work[pivot].inverse();
  for (FieldElement& e : work) {
    if (!e.is_zero()) e = e * lead;
  }
  for (FieldElement& e : comb) {
    if (!e.is_zero()) e = e * lead;
  }
  stored_.push_back(Stored{std::move(work), std::move(comb), pivot});
  return std::nullopt;
}

std::optional<Vec> SpanSolver::express(const Vec& v) const {
  internal_check(v.size() == ambient_, "SpanSolver: wrong vector length");
  Vec work = v;
  Vec x(seen_, FieldElement::zero(field_));
  for (const Stored& s : stored_) {
    const FieldElement c = work[s.pivot];
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i < ambient_; ++i) {
      if (!s.vec[i].is_zero()) work[i] = work[i] - c * s.vec[i];
    }
    for (std::size_t i = 0; i < s.comb.size(); ++i) {
      if (!s.comb[i].is_zero()) x[i] = x[i] + c * s.comb[i];
    }
  }
  for (const FieldElement& e : work) {
    if (!e.is_zero()) return std::nullopt;
  }
  return x;
}

std::size_t column_space_rank(FieldSpec f, const KMatrix& a) {
  SpanSolver solver(f, a.rows());
  Vec col(a.rows(), FieldElement::zero(f));
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) col[i] = a(i, j);
    solver.insert(col);
  }
  return solver.rank();
}

KMatrix kernel_basis(FieldSpec f, const KMatrix& a) {
  SpanSolver solver(f, a.rows());
  std::vector<Vec> kernel;
  Vec col(a.rows(), FieldElement::zero(f));
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) col[i] = a(i, j);
    if (auto dep = solver.insert(col)) {
      Vec k(a.cols(), FieldElement::zero(f));
      k[j] = FieldElement::one(f);
      for (std::size_t i = 0; i < dep->size(); ++i) k[i] = -(*dep)[i];
      kernel.push_back(std::move(k));
    }
  }
  KMatrix out = kmatrix_zero(f, a.cols(), kernel.size());
  for (std::size_t j = 0; j < kernel.size(); ++j) {
    for (std::size_t i = 0; i < a.cols(); ++i) out(i, j) = kernel[j][i];
  }
  return out;
}

}  // namespace ktmod
