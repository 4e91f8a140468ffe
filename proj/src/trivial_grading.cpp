// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#include "ktmod/trivial_grading.hpp"

#include <algorithm>

namespace ktmod {
namespace {

BigInt big_abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

void add_row(IntegerMatrix& a, std::size_t target, std::size_t source,
             const BigInt& factor) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    a(target, j) += factor * a(source, j);
  }
}

void add_col(IntegerMatrix& a, std::size_t target, std::size_t source,
             const BigInt& factor) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    a(i, target) += factor * a(i, source);
  }
}

void swap_rows(IntegerMatrix& a, std::size_t i1, std::size_t i2) {
  if (i1 == i2) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(i1, j), a(i2, j));
}

void swap_cols(IntegerMatrix& a, std::size_t j1, std::size_t j2) {
  if (j1 == j2) return;
  for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, j1), a(i, j2));
}

}  // namespace

std::vector<BigInt> integer_snf(IntegerMatrix a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<BigInt> divisors;
  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    // Deterministic pivot: minimal absolute value, then row, then column.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a(i, j) == 0) continue;
        if (pi == rows || big_abs(a(i, j)) < big_abs(a(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == rows) break;
    swap_rows(a, t, pi);
    swap_cols(a, t, pj);
    // Shrink the pivot until it clears its row and column and divides the
    // rest of the submatrix. Each remainder swap strictly decreases |pivot|,
    // so this terminates.
    bool stable = false;
    while (!stable) {
      stable = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        const BigInt q = a(i, t) / a(t, t);  // truncated division
        if (q != 0) add_row(a, i, t, -q);
        if (a(i, t) != 0) {
          swap_rows(a, i, t);
          stable = false;
        }
      }
      if (!stable) continue;
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        const BigInt q = a(t, j) / a(t, t);
        if (q != 0) add_col(a, j, t, -q);
        if (a(t, j) != 0) {
          swap_cols(a, j, t);
          stable = false;
        }
      }
      if (!stable) continue;
      for (std::size_t i = t + 1; i < rows && stable; ++i) {
        for (std::size_t j = t + 1; j < cols && stable; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            add_row(a, t, i, 1);
            stable = false;
          }
        }
      }
    }
    divisors.push_back(big_abs(a(t, t)));
  }
  for (std::size_t i = 0; i + 1 < divisors.size(); ++i) {
    internal_check(divisors[i + 1] % divisors[i] == 0,
                   "integer SNF chain breaks divisibility");
  }
  return divisors;
}

std::vector<std::pair<BigInt, std::int64_t>> factor_integer(const BigInt& n) {
  if (n < 2) {
    throw UsageError("factor_integer expects an integer >= 2, got " + n.str());
  }
  if (n > kFactorizationBound) {
    throw UsageError("divisor " + n.str() +
                     " exceeds the supported factorization bound 10^12");
  }
  std::int64_t v = n.convert_to<std::int64_t>();
  std::vector<std::pair<BigInt, std::int64_t>> factors;
  auto strip = [&](std::int64_t p) {
    std::int64_t k = 0;
    while (v % p == 0) {
      v /= p;
      ++k;
    }
    if (k > 0) factors.emplace_back(BigInt(p), k);
  };
  strip(2);
  for (std::int64_t p = 3; p * p <= v; p += 2) strip(p);
  if (v > 1) factors.emplace_back(BigInt(v), 1);
  return factors;
}

namespace {

struct ComponentDecomp {
  std::vector<BigInt> torsion;  // invariant factors > 1, ascending chain
  std::int64_t free_rank = 0;
};

ComponentDecomp decompose_component(const IntegerMatrix& presentation) {
  ComponentDecomp out;
  std::vector<BigInt> divisors = integer_snf(presentation);
  out.free_rank = static_cast<std::int64_t>(presentation.rows()) -
                  static_cast<std::int64_t>(divisors.size());
  for (BigInt& d : divisors) {
    if (d > 1) out.torsion.push_back(std::move(d));
  }
  return out;
}

}  // namespace

PrimePowerSignature prime_power_decomposition(const TriviallyGradedModule& m) {
  PrimePowerSignature sig;
  for (const auto& [degree, presentation] : m.components) {
    ComponentDecomp decomp = decompose_component(presentation);
    if (decomp.free_rank > 0) sig.free_ranks[degree] = decomp.free_rank;
    for (const BigInt& d : decomp.torsion) {
      for (const auto& [p, k] : factor_integer(d)) {
        sig.torsion.push_back(PrimePowerSummand{degree, p, k});
      }
    }
  }
  std::sort(sig.torsion.begin(), sig.torsion.end());
  return sig;
}

GradedEDResult graded_elementary_divisor_decomposition(
    const TriviallyGradedModule& m) {
  GradedEDResult result;
  std::vector<std::pair<BigInt, std::int64_t>> factors;  // (divisor, degree)
  for (const auto& [degree, presentation] : m.components) {
    ComponentDecomp decomp = decompose_component(presentation);
    if (decomp.free_rank > 0) result.free_ranks[degree] = decomp.free_rank;
    for (const BigInt& d : decomp.torsion) factors.emplace_back(d, degree);
  }
  std::sort(factors.begin(), factors.end());
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    if (factors[i + 1].first % factors[i].first != 0) {
      // Sorted by value, so neither divides the other; per-degree invariant
      // factors always chain, so the clash is necessarily cross-degree.
      internal_check(factors[i].second != factors[i + 1].second,
                     "witness pair unexpectedly shares a degree");
      result.exists = false;
      result.witness = {{{factors[i].second, factors[i].first},
                         {factors[i + 1].second, factors[i + 1].first}}};
      return result;
    }
  }
  result.exists = true;
  result.summands.reserve(factors.size());
  for (auto& [d, degree] : factors) {
    result.summands.emplace_back(degree, std::move(d));
  }
  return result;
}

UngradedDivisors ungraded_elementary_divisors(const TriviallyGradedModule& m) {
  PrimePowerSignature sig = prime_power_decomposition(m);
  UngradedDivisors out;
  for (const auto& [degree, rank] : sig.free_ranks) out.free_rank += rank;
  std::map<BigInt, std::vector<std::int64_t>> exponents;
  for (const PrimePowerSummand& s : sig.torsion) {
    exponents[s.prime].push_back(s.exponent);
  }
  std::size_t chain_length = 0;
  for (auto& [p, exps] : exponents) {
    std::sort(exps.rbegin(), exps.rend());
    chain_length = std::max(chain_length, exps.size());
  }
  // Slot t (from the top) collects each prime's t-th largest power; the
  // products form the invariant-factor chain, largest last.
  out.chain.assign(chain_length, BigInt(1));
  for (const auto& [p, exps] : exponents) {
    for (std::size_t t = 0; t < exps.size(); ++t) {
      out.chain[chain_length - 1 - t] *=
          boost::multiprecision::pow(p, static_cast<unsigned>(exps[t]));
    }
  }
  return out;
}

}  // namespace ktmod
