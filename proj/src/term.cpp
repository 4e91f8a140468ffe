// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#include "ktmod/term.hpp"

namespace ktmod {

Term Term::monomial(FieldElement coeff, std::int64_t degree) {
  if (degree < 0) {
    throw UsageError("term degree must be a natural number, got " +
                     std::to_string(degree));
  }
  if (coeff.is_zero()) return zero(coeff.field());
  return Term(std::move(coeff), degree);
}

std::string Term::str() const {
  if (is_zero()) return "0";
  if (degree_ == 0) return coeff_.str();
  std::string power = degree_ == 1 ? "T" : "T^" + std::to_string(degree_);
  if (coeff_.is_one()) return power;
  return coeff_.str() + "*" + power;
}

Term term_mul(const Term& a, const Term& b) {
  if (a.is_zero() || b.is_zero()) {
    // Touch both coefficients so field mismatches still surface.
    return Term::monomial(a.coeff() * b.coeff(), 0);
  }
  return Term::monomial(a.coeff() * b.coeff(), a.degree() + b.degree());
}

Term term_div(const Term& a, const Term& b) {
  if (b.is_zero()) throw DivisionByZeroError("term division by zero");
  if (a.is_zero()) return Term::monomial(a.coeff() / b.coeff(), 0);
  if (a.degree() < b.degree()) {
    throw NonDivisibleError("term " + b.str() + " does not divide " + a.str());
  }
  return Term::monomial(a.coeff() / b.coeff(), a.degree() - b.degree());
}

Term term_neg(const Term& a) {
  return Term::monomial(-a.coeff(), a.degree());
}

Term term_add_aligned(const Term& a, const Term& b) {
  if (a.is_zero()) return Term::monomial(a.coeff() + b.coeff(), b.degree());
  if (b.is_zero()) return Term::monomial(a.coeff() + b.coeff(), a.degree());
  internal_check(a.degree() == b.degree(),
                 "aligned term sum hit a degree mismatch");
  return Term::monomial(a.coeff() + b.coeff(), a.degree());
}

Term term_sub_aligned(const Term& a, const Term& b) {
  return term_add_aligned(a, term_neg(b));
}

}  // namespace ktmod
