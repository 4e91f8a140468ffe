// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "ktmod/errors.hpp"

namespace ktmod {

// Shared sentinel for infinite torsion exponents and infinite persistence.
// Chosen so that the natural int64 order puts infinity last.
inline constexpr std::int64_t kInfinity =
    std::numeric_limits<std::int64_t>::max();

// Annihilator exponent of a cyclic summand: k >= 1, or infinity for a free
// summand. Exponent 0 (the zero module) is not representable on purpose.
class TorsionExponent {
 public:
  static TorsionExponent finite(std::int64_t k);
  static TorsionExponent infinity() { return TorsionExponent(kInfinity); }

  bool is_infinite() const { return v_ == kInfinity; }
  std::int64_t value() const;            // finite only
  std::int64_t raw() const { return v_; }  // kInfinity encodes infinity

  std::string str() const;  // "3" or "inf"

  friend auto operator<=>(TorsionExponent a, TorsionExponent b) = default;

 private:
  explicit TorsionExponent(std::int64_t v) : v_(v) {}
  std::int64_t v_;
};

// One direct summand: the shifted cyclic module with the given annihilator
// exponent (infinite exponent = free summand).
struct Summand {
  std::int64_t shift;
  TorsionExponent exponent;

  friend auto operator<=>(const Summand&, const Summand&) = default;
};

// Multiset of summands in canonical order: sorted by (shift, exponent),
// infinite exponents last within a shift. Equality is multiset equality.
class GradedSignature {
 public:
  GradedSignature() = default;
  static GradedSignature of(std::vector<Summand> summands);

  void add(Summand s);
  const std::vector<Summand>& summands() const { return summands_; }
  bool empty() const { return summands_.empty(); }
  std::size_t size() const { return summands_.size(); }

  std::string str() const;  // "{(0,inf), (1,2)}"

  friend bool operator==(const GradedSignature&,
                         const GradedSignature&) = default;

 private:
  std::vector<Summand> summands_;
};

// Dimension over K of the degree-d slice of the module the signature names.
// A summand (n, k) contributes 1 exactly when n <= d and (k infinite or
// d < n + k).
std::int64_t signature_hilbert_dim(const GradedSignature& sig, std::int64_t d);

// Signature of the direct sum: multiset union.
GradedSignature signature_union(const GradedSignature& a,
                                const GradedSignature& b);

}  // namespace ktmod
