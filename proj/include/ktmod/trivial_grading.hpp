// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ktmod/field.hpp"
#include "ktmod/matrix.hpp"

namespace ktmod {

using IntegerMatrix = Matrix<BigInt>;

// Finitely generated graded module over Z with the trivial grading: an
// independent finitely generated abelian group in each degree, presented by
// an integer matrix (rows = generators, columns = relations).
struct TriviallyGradedModule {
  std::map<std::int64_t, IntegerMatrix> components;  // degree -> presentation
};

// Invariant factors |d_1| | |d_2| | ... of an integer matrix, units included,
// nonzero entries only (their count is the rank).
std::vector<BigInt> integer_snf(IntegerMatrix a);

// Largest divisor magnitude the prime factorization helpers accept.
inline const BigInt kFactorizationBound = BigInt("1000000000000");

// Ascending (prime, exponent) factorization by trial division. UsageError
// beyond kFactorizationBound.
std::vector<std::pair<BigInt, std::int64_t>> factor_integer(const BigInt& n);

// One cyclic prime-power summand Z/p^k placed in a degree.
struct PrimePowerSummand {
  std::int64_t degree;
  BigInt prime;
  std::int64_t exponent;

  friend bool operator==(const PrimePowerSummand&,
                         const PrimePowerSummand&) = default;
  friend bool operator<(const PrimePowerSummand& a,
                        const PrimePowerSummand& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.prime != b.prime) return a.prime < b.prime;
    return a.exponent < b.exponent;
  }
};

// Canonical graded prime-power decomposition: torsion summands sorted by
// (degree, prime, exponent) plus the free rank per degree (nonzero only).
struct PrimePowerSignature {
  std::vector<PrimePowerSummand> torsion;
  std::map<std::int64_t, std::int64_t> free_ranks;

  friend bool operator==(const PrimePowerSignature&,
                         const PrimePowerSignature&) = default;
};

PrimePowerSignature prime_power_decomposition(const TriviallyGradedModule& m);

// Result of the graded elementary-divisor existence question. When a graded
// decomposition by a divisor chain exists, `summands` holds it sorted by
// (divisor, degree); otherwise `witness` is a pair of torsion summands,
// necessarily in different degrees and with incomparable annihilators under
// divisibility, blocking any chain.
struct GradedEDResult {
  bool exists = false;
  std::vector<std::pair<std::int64_t, BigInt>> summands;  // (degree, divisor)
  std::map<std::int64_t, std::int64_t> free_ranks;
  std::optional<std::array<std::pair<std::int64_t, BigInt>, 2>> witness;
};

GradedEDResult graded_elementary_divisor_decomposition(
    const TriviallyGradedModule& m);

// Elementary divisors of the underlying ungraded group (degrees forgotten):
// the torsion chain plus the total free rank.
struct UngradedDivisors {
  std::vector<BigInt> chain;  // d_1 | d_2 | ..., all > 1
  std::int64_t free_rank = 0;

  friend bool operator==(const UngradedDivisors&,
                         const UngradedDivisors&) = default;
};

UngradedDivisors ungraded_elementary_divisors(const TriviallyGradedModule& m);

}  // namespace ktmod
