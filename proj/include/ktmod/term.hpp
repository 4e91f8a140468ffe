// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

#include "ktmod/field.hpp"

namespace ktmod {

// Homogeneous element c * T^d of K[T]. The zero term is canonically
// (0, degree 0), so degree() is well defined on every value.
class Term {
 public:
  // Rational zero term; exists for containers. Library code mints terms
  // through zero()/one()/monomial().
  Term() : coeff_(), degree_(0) {}

  static Term zero(FieldSpec f) { return Term(FieldElement::zero(f), 0); }
  static Term one(FieldSpec f) { return Term(FieldElement::one(f), 0); }
  static Term monomial(FieldElement coeff, std::int64_t degree);

  const FieldElement& coeff() const { return coeff_; }
  std::int64_t degree() const { return degree_; }
  FieldSpec field() const { return coeff_.field(); }
  bool is_zero() const { return coeff_.is_zero(); }

  std::string str() const;  // "0", "1", "T", "2*T^3", "-1/2*T"

  friend bool operator==(const Term& a, const Term& b) {
    return a.coeff_ == b.coeff_ && a.degree_ == b.degree_;
  }
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  Term(FieldElement coeff, std::int64_t degree)
      : coeff_(std::move(coeff)), degree_(degree) {}

  FieldElement coeff_;
  std::int64_t degree_;
};

Term term_mul(const Term& a, const Term& b);
// Exact division. DivisionByZeroError when b == 0; NonDivisibleError when
// deg a < deg b (T^(deg a - deg b) would leave K[T]).
Term term_div(const Term& a, const Term& b);
Term term_neg(const Term& a);
// Sum/difference of terms of one degree, as produced by the column and row
// updates where the degree law guarantees alignment. A degree mismatch
// between nonzero operands is a bug upstream, hence InternalError.
Term term_add_aligned(const Term& a, const Term& b);
Term term_sub_aligned(const Term& a, const Term& b);

}  // namespace ktmod
