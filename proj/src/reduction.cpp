// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#include "ktmod/reduction.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>

namespace ktmod {

// One sweep processes columns left to right. When column k is handled, the
// columns before it are final (nothing later touches them), their lows are
// pairwise distinct, and the inner loop walks rows from k's initial low
// downward, zeroing every entry of column k that sits in a row owned by an
// earlier low: the update col_k -= (A[j][k]/A[j][k']) * col_k' cancels entry
// (j, k) exactly, and it only changes rows <= j because column k' is zero
// below its low j. So after the sweep, column k is either zero or its low is
// a row no earlier column owns -- the lows stay pairwise distinct, a second
// sweep finds no matching (j, k') pair, and the re-check below can never
// loop. It is kept (and instrumented) as a guard on that argument.
ReductionResult reduce(const GradedMatrix& a) {
  const std::size_t r = a.rows();
  const std::size_t s = a.cols();
  GradedMatrix work = a;
  GradedMatrix transform = identity_matrix(a.field(), a.col_degrees());
  std::size_t axpy_count = 0;
  std::size_t passes = 0;

  while (true) {
    ++passes;
    internal_check(passes <= s + 1, "reduce: sweep count exceeded bound");
    std::vector<std::optional<std::size_t>> owner_of_row(r);
    for (std::size_t k = 0; k < s; ++k) {
      if (auto initial_low = work.low(k)) {
        // The low is computed once per column and sweep; updates at row j
        // only touch rows <= j, so rows between j and the initial low stay
        // zero and no recomputation is needed.
        for (std::size_t j = *initial_low + 1; j-- > 0;) {
          const Term& entry = work.at(j, k);
          if (entry.is_zero()) continue;
          if (!owner_of_row[j]) continue;
          const std::size_t source = *owner_of_row[j];
          const Term factor = term_div(entry, work.at(j, source));
          work.col_axpy(k, source, factor);
          transform.col_axpy(k, source, factor);
          ++axpy_count;
        }
      }
      if (auto final_low = work.low(k)) {
        internal_check(!owner_of_row[*final_low],
                       "reduce: two columns share a low after the sweep");
        owner_of_row[*final_low] = k;
      }
    }
    if (is_reduced(work)) break;
  }

  ReductionResult result{std::move(work), std::move(transform), {}, axpy_count,
                         passes};
  for (std::size_t k = 0; k < s; ++k) {
    if (auto l = result.reduced.low(k)) result.low_map.emplace(k, *l);
  }
  return result;
}

GradedSignature quotient_signature(const GradedMatrix& reduced) {
  if (!is_reduced(reduced)) {
    throw UsageError("quotient_signature requires a reduced matrix");
  }
  std::vector<bool> row_is_low(reduced.rows(), false);
  GradedSignature sig;
  for (std::size_t k = 0; k < reduced.cols(); ++k) {
    auto l = reduced.low(k);
    if (!l) continue;
    row_is_low[*l] = true;
    const std::int64_t exponent =
        reduced.col_degrees()[k] - reduced.row_degrees()[*l];
    if (exponent == 0) continue;  // unit low entry kills its generator
    sig.add(Summand{reduced.row_degrees()[*l], TorsionExponent::finite(exponent)});
  }
  for (std::size_t j = 0; j < reduced.rows(); ++j) {
    if (!row_is_low[j]) {
      sig.add(Summand{reduced.row_degrees()[j], TorsionExponent::infinity()});
    }
  }
  return sig;
}

SmithNormalForm to_smith_normal_form(const GradedMatrix& reduced) {
  if (!is_reduced(reduced)) {
    throw UsageError("to_smith_normal_form requires a reduced matrix");
  }
  GradedMatrix work = reduced;
  for (std::size_t k = 0; k < work.cols(); ++k) {
    auto l = work.low(k);
    if (!l) continue;
    // Row updates with source row *l only change entries above other
    // columns' lows, so lows are stable and the clearing order is free.
    for (std::size_t j = *l; j-- > 0;) {
      const Term& entry = work.at(j, k);
      if (entry.is_zero()) continue;
      work.row_axpy(j, *l, term_div(entry, work.at(*l, k)));
    }
  }
  SmithNormalForm snf;
  std::vector<std::size_t> row_use(work.rows(), 0);
  for (std::size_t k = 0; k < work.cols(); ++k) {
    auto l = work.low(k);
    if (!l) continue;
    std::size_t nonzeros = 0;
    for (std::size_t j = 0; j < work.rows(); ++j) {
      if (!work.at(j, k).is_zero()) ++nonzeros;
    }
    internal_check(nonzeros == 1, "smith: cleared column not diagonal");
    internal_check(++row_use[*l] == 1, "smith: low row reused");
    snf.diagonal.push_back(
        Term::monomial(FieldElement::one(work.field()), work.at(*l, k).degree()));
  }
  std::sort(snf.diagonal.begin(), snf.diagonal.end(),
            [](const Term& x, const Term& y) { return x.degree() < y.degree(); });
  snf.rank = snf.diagonal.size();
  return snf;
}

namespace {

// Determinant of the square submatrix given by row/col index lists, by
// cofactor expansion along the first listed column. Entries are homogeneous
// and every permutation product lands in one degree, so aligned sums apply.
Term minor_det(const GradedMatrix& a, const std::vector<std::size_t>& rows,
               const std::vector<std::size_t>& cols, std::size_t col_from) {
  const std::size_t n = rows.size();
  if (n == 0) return Term::one(a.field());
  const std::size_t k = cols[col_from];
  Term acc = Term::zero(a.field());
  std::vector<std::size_t> sub_rows;
  sub_rows.reserve(n - 1);
  for (std::size_t t = 0; t < n; ++t) {
    const Term& entry = a.at(rows[t], k);
    if (entry.is_zero()) continue;
    sub_rows.clear();
    for (std::size_t u = 0; u < n; ++u) {
      if (u != t) sub_rows.push_back(rows[u]);
    }
    Term cofactor = term_mul(entry, minor_det(a, sub_rows, cols, col_from + 1));
    if (t % 2 == 1) cofactor = term_neg(cofactor);
    acc = term_add_aligned(acc, cofactor);
  }
  return acc;
}

void enumerate_subsets(std::size_t n, std::size_t size,
                       std::vector<std::size_t>& current,
                       const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (current.size() == size) {
    visit(current);
    return;
  }
  std::size_t start = current.empty() ? 0 : current.back() + 1;
  for (std::size_t i = start; i + (size - current.size()) <= n; ++i) {
    current.push_back(i);
    enumerate_subsets(n, size, current, visit);
    current.pop_back();
  }
}

}  // namespace

SmithNormalForm elementary_divisors_by_minors(const GradedMatrix& a) {
  constexpr std::size_t kMaxSide = 6;
  if (a.rows() > kMaxSide || a.cols() > kMaxSide) {
    throw UsageError("minors oracle is limited to matrices of size <= 6");
  }
  SmithNormalForm snf;
  // gcd of the i-minors: minors are homogeneous, so the gcd of the nonzero
  // ones is the monomial with their minimum degree; no nonzero i-minor
  // means gcd 0 and rank i-1.
  std::int64_t prev_gcd_degree = 0;  // gcd of 0-minors is 1 = T^0
  const std::size_t bound = std::min(a.rows(), a.cols());
  for (std::size_t i = 1; i <= bound; ++i) {
    std::optional<std::int64_t> min_degree;
    std::vector<std::size_t> rows_sel, cols_sel;
    enumerate_subsets(a.rows(), i, rows_sel, [&](const std::vector<std::size_t>& rows) {
      std::vector<std::size_t> inner;
      enumerate_subsets(a.cols(), i, inner, [&](const std::vector<std::size_t>& cols) {
        Term det = minor_det(a, rows, cols, 0);
        if (det.is_zero()) return;
        if (!min_degree || det.degree() < *min_degree) {
          min_degree = det.degree();
        }
      });
    });
    if (!min_degree) break;
    internal_check(*min_degree >= prev_gcd_degree,
                   "minor gcd degrees must be nondecreasing");
    snf.diagonal.push_back(Term::monomial(FieldElement::one(a.field()),
                                          *min_degree - prev_gcd_degree));
    prev_gcd_degree = *min_degree;
  }
  snf.rank = snf.diagonal.size();
  // Divisors are monomials; sorting by degree matches the quotient chain.
  std::sort(snf.diagonal.begin(), snf.diagonal.end(),
            [](const Term& x, const Term& y) { return x.degree() < y.degree(); });
  return snf;
}

namespace {

std::int64_t rand_below(std::mt19937_64& rng, std::int64_t n) {
  return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
}

FieldElement rand_nonzero(FieldSpec f, std::mt19937_64& rng) {
  if (f.is_prime_field()) {
    return FieldElement::from_int(f, 1 + rand_below(rng, f.modulus() - 1));
  }
  std::int64_t num = 1 + rand_below(rng, 9);
  if (rng() & 1) num = -num;
  std::int64_t den = 1 + rand_below(rng, 9);
  return FieldElement::from_rational(BigRational(num, den));
}

// One random graded invertible operation on rows or columns.
void random_graded_op(GradedMatrix& m, std::mt19937_64& rng) {
  const std::size_t r = m.rows();
  const std::size_t s = m.cols();
  for (int attempt = 0; attempt < 8; ++attempt) {
    switch (rng() % 6) {
      case 0: {  // column axpy onto a later-or-equal degree column
        if (s < 2) break;
        std::size_t target = static_cast<std::size_t>(rand_below(rng, s));
        std::size_t source = static_cast<std::size_t>(rand_below(rng, s));
        if (target == source) break;
        if (m.col_degrees()[target] < m.col_degrees()[source]) {
          std::swap(target, source);
        }
        const std::int64_t deg =
            m.col_degrees()[target] - m.col_degrees()[source];
        m.col_axpy(target, source,
                   Term::monomial(rand_nonzero(m.field(), rng), deg));
        return;
      }
      case 1: {  // row axpy onto an earlier-or-equal degree row
        if (r < 2) break;
        std::size_t target = static_cast<std::size_t>(rand_below(rng, r));
        std::size_t source = static_cast<std::size_t>(rand_below(rng, r));
        if (target == source) break;
        if (m.row_degrees()[source] < m.row_degrees()[target]) {
          std::swap(target, source);
        }
        const std::int64_t deg =
            m.row_degrees()[source] - m.row_degrees()[target];
        m.row_axpy(target, source,
                   Term::monomial(rand_nonzero(m.field(), rng), deg));
        return;
      }
      case 2: {
        if (s < 1) break;
        m.scale_col(static_cast<std::size_t>(rand_below(rng, s)),
                    rand_nonzero(m.field(), rng));
        return;
      }
      case 3: {
        if (r < 1) break;
        m.scale_row(static_cast<std::size_t>(rand_below(rng, r)),
                    rand_nonzero(m.field(), rng));
        return;
      }
      case 4: {  // equal-degree column swap
        if (s < 2) break;
        std::size_t k1 = static_cast<std::size_t>(rand_below(rng, s));
        std::size_t k2 = static_cast<std::size_t>(rand_below(rng, s));
        if (k1 == k2 || m.col_degrees()[k1] != m.col_degrees()[k2]) break;
        m.swap_cols(k1, k2);
        return;
      }
      default: {  // equal-degree row swap
        if (r < 2) break;
        std::size_t j1 = static_cast<std::size_t>(rand_below(rng, r));
        std::size_t j2 = static_cast<std::size_t>(rand_below(rng, r));
        if (j1 == j2 || m.row_degrees()[j1] != m.row_degrees()[j2]) break;
        m.swap_rows(j1, j2);
        return;
      }
    }
  }
}

}  // namespace

bool verify_signature_uniqueness(const GradedMatrix& a, std::size_t trials,
                                 std::uint64_t seed) {
  const GradedSignature baseline =
      quotient_signature(reduce(a).reduced);
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    GradedMatrix perturbed = a;
    const std::size_t ops =
        1 + static_cast<std::size_t>(rand_below(rng, 1 + std::int64_t(
                                                        a.rows() + a.cols())));
    for (std::size_t i = 0; i < ops; ++i) random_graded_op(perturbed, rng);
    if (quotient_signature(reduce(perturbed).reduced) != baseline) {
      return false;
    }
  }
  return true;
}

}  // namespace ktmod
