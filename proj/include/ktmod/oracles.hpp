// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ktmod/persistence.hpp"
#include "ktmod/reduction.hpp"
#include "ktmod/trivial_grading.hpp"

namespace ktmod {

// Degreewise dimension of F / im(A) computed by plain K-linear algebra:
// assemble the degree-d slice of A (one scalar per entry whose column degree
// is <= d) and subtract its rank from the number of generators present.
// Independent of the column-reduction path; the primary correctness oracle.
std::int64_t module_hilbert_dim(const GradedMatrix& a, std::int64_t d);

// Deterministic RNG helpers over mt19937_64. std::uniform_int_distribution
// is implementation-defined, so sampling is done on the raw engine.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t raw() { return engine_(); }
  std::int64_t below(std::int64_t n);             // [0, n)
  std::int64_t range(std::int64_t lo, std::int64_t hi);  // inclusive
  bool coin() { return (engine_() & 1) != 0; }

 private:
  std::mt19937_64 engine_;
};

FieldElement random_element(FieldSpec f, Rng& rng);
FieldElement random_nonzero_element(FieldSpec f, Rng& rng);

// Random valid instance: dims in [0, max_dim], degrees drawn in [0, max_deg]
// and sorted, each admissible entry filled with probability ~1/2.
GradedMatrix random_graded_matrix(FieldSpec f, Rng& rng,
                                  std::size_t max_dim = 8,
                                  std::int64_t max_deg = 10);

PersistenceModule random_persistence_module(FieldSpec f, Rng& rng,
                                            std::size_t max_levels = 5,
                                            std::size_t max_dim = 4);

// One reduction batch: every instance is reduced once and checked against
// the Hilbert-function oracle over degrees 0..max_checked_degree, against
// the transform contract (A * B == A' and A' reduced), and against the
// termination contract (axpys <= r*s, single sweep).
struct ReductionBatchReport {
  std::size_t instances = 0;
  std::size_t hilbert_mismatches = 0;
  std::size_t transform_failures = 0;
  std::size_t termination_violations = 0;
  std::string first_issue;
};

ReductionBatchReport reduction_batch(FieldSpec f, std::size_t instances,
                                     std::uint64_t seed,
                                     std::size_t max_dim = 8,
                                     std::int64_t max_deg = 10,
                                     std::int64_t max_checked_degree = 21);

// Reduced-matrix divisors vs the minors oracle on small instances.
struct MinorsBatchReport {
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  std::string first_issue;
};

MinorsBatchReport minors_agreement_batch(FieldSpec f, std::size_t instances,
                                         std::uint64_t seed,
                                         std::size_t max_dim = 5);

// Brute-force answer to the graded elementary-divisor existence question:
// search every way of partitioning each degree's prime-power multiset into
// blocks with pairwise distinct primes (one cyclic summand per block), then
// every way of chaining the block values across degrees.
bool graded_ed_exists_bruteforce(const TriviallyGradedModule& m);

// Exhaustive cross-check of the chain criterion against the brute force on
// all modules with at most `max_summands` cyclic prime-power summands over
// the given primes, exponents and degrees.
struct ZmodEnumReport {
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  std::string first_issue;
};

ZmodEnumReport zmod_bruteforce_exhaustive(std::size_t max_summands = 3,
                                          std::int64_t max_exponent = 2,
                                          std::int64_t max_degree = 2);

// Hand-built filtration corpus (named, each at most 30 simplices) reused by
// tests, selftest and the acceptance suite.
std::vector<std::pair<std::string, FilteredComplex>> sample_filtrations();

// Whole-pipeline consistency over the corpus: bars alive at every level ==
// the directly computed Betti number, for every homology degree that occurs.
struct PersistenceReport {
  std::size_t complexes = 0;
  std::size_t comparisons = 0;
  std::size_t mismatches = 0;
  std::string first_issue;
};

PersistenceReport persistence_consistency_check(FieldSpec f);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Compact seeded oracle suites for the CLI selftest command.
std::vector<CheckResult> run_selftest(std::uint64_t seed);

}  // namespace ktmod
