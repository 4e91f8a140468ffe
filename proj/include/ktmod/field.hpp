// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>

#include "ktmod/errors.hpp"

namespace ktmod {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

bool is_prime(std::int64_t n);

// Coefficient field: GF(p) for a single-word prime p, or the rationals.
// Small value type; pass by value.
class FieldSpec {
 public:
  // Largest admitted prime modulus. Keeping p below 2^31 means every
  // residue product fits in int64 without overflow handling.
  static constexpr std::int64_t kMaxModulus = (std::int64_t{1} << 31) - 1;

  static FieldSpec gf(std::int64_t p);
  static FieldSpec rationals() { return FieldSpec(0); }

  bool is_prime_field() const { return p_ != 0; }
  bool is_rationals() const { return p_ == 0; }
  std::int64_t modulus() const;  // prime fields only
  std::int64_t characteristic() const { return p_; }
  std::string name() const;  // "GF(5)", "Q"

  friend bool operator==(FieldSpec a, FieldSpec b) { return a.p_ == b.p_; }
  friend bool operator!=(FieldSpec a, FieldSpec b) { return a.p_ != b.p_; }

 private:
  explicit FieldSpec(std::int64_t p) : p_(p) {}
  std::int64_t p_;  // 0 encodes the rationals
};

// One element of a FieldSpec. GF(p) values are stored as residues in [0, p);
// rationals as boost cpp_rational, which keeps them in lowest terms with a
// positive denominator.
class FieldElement {
 public:
  // Rational zero. Exists so containers can value-initialize; library code
  // always mints elements through zero()/one()/from_int()/parse().
  FieldElement() : field_(FieldSpec::rationals()), res_(0) {}

  static FieldElement zero(FieldSpec f);
  static FieldElement one(FieldSpec f);
  static FieldElement from_int(FieldSpec f, std::int64_t v);
  static FieldElement from_rational(BigRational v);
  // Text forms: decimal residue for GF(p), "a" or "a/b" for rationals.
  static FieldElement parse(FieldSpec f, std::string_view text);

  FieldSpec field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  std::int64_t residue() const;         // GF(p) only
  const BigRational& rational() const;  // rationals only

  std::string str() const;

  FieldElement inverse() const;  // DivisionByZeroError on zero

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  // Elements of different fields are never equal; arithmetic on them throws.
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) {
    return !(a == b);
  }

 private:
  FieldElement(FieldSpec f, std::int64_t res) : field_(f), res_(res) {}
  FieldElement(FieldSpec f, BigRational rat)
      : field_(f), res_(0), rat_(std::move(rat)) {}

  FieldSpec field_;
  std::int64_t res_;  // GF(p) residue in [0, p)
  BigRational rat_;   // rational value
};

FieldElement inv(const FieldElement& a);

}  // namespace ktmod
