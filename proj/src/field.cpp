// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#include "ktmod/field.hpp"

#include <charconv>

namespace ktmod {
namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field()) {
    throw FieldMismatchError("operands belong to different fields: " +
                             a.field().name() + " vs " + b.field().name());
  }
}

// Extended Euclid; returns gcd(a, b) and x with a*x == gcd (mod b).
std::int64_t egcd_x(std::int64_t a, std::int64_t b, std::int64_t& x) {
  std::int64_t x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  x = x0;
  return a;
}

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

BigInt big_from_token(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s));
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::gf(std::int64_t p) {
  if (p < 2 || p > kMaxModulus) {
    throw UsageError("GF(p) modulus must satisfy 2 <= p < 2^31, got " +
                     std::to_string(p));
  }
  if (!is_prime(p)) {
    throw UsageError("GF(p) modulus must be prime, got " + std::to_string(p));
  }
  return FieldSpec(p);
}

std::int64_t FieldSpec::modulus() const {
  if (!is_prime_field()) throw UsageError("the rationals have no modulus");
  return p_;
}

std::string FieldSpec::name() const {
  return is_rationals() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

FieldElement FieldElement::zero(FieldSpec f) {
  return f.is_prime_field() ? FieldElement(f, std::int64_t{0})
                            : FieldElement(f, BigRational(0));
}

FieldElement FieldElement::one(FieldSpec f) { return from_int(f, 1); }

FieldElement FieldElement::from_int(FieldSpec f, std::int64_t v) {
  if (f.is_rationals()) return FieldElement(f, BigRational(v));
  std::int64_t p = f.modulus();
  return FieldElement(f, ((v % p) + p) % p);
}

FieldElement FieldElement::from_rational(BigRational v) {
  return FieldElement(FieldSpec::rationals(), std::move(v));
}

FieldElement FieldElement::parse(FieldSpec f, std::string_view text) {
  if (f.is_prime_field()) {
    if (!is_integer_token(text)) {
      throw ParseError("invalid " + f.name() + " element '" +
                       std::string(text) + "': expected a decimal integer");
    }
    std::int64_t v = 0;
    std::string_view digits = text;
    bool negative = false;
    if (digits.front() == '+' || digits.front() == '-') {
      negative = digits.front() == '-';
      digits.remove_prefix(1);
    }
    auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      // Out-of-range literals are still valid residues; fold via bignum.
      BigInt big = big_from_token(text);
      big %= f.modulus();
      v = big.convert_to<std::int64_t>();
      return from_int(f, v);
    }
    return from_int(f, negative ? -v : v);
  }
  std::string_view num = text, den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!is_integer_token(den)) {
      throw ParseError("invalid rational '" + std::string(text) +
                       "': bad denominator");
    }
  }
  if (!is_integer_token(num)) {
    throw ParseError("invalid rational '" + std::string(text) +
                     "': expected \"a\" or \"a/b\" with integer a, b");
  }
  BigInt n = big_from_token(num);
  BigInt d = den.empty() ? BigInt(1) : big_from_token(den);
  if (d == 0) {
    throw ParseError("invalid rational '" + std::string(text) +
                     "': zero denominator");
  }
  // cpp_rational's two-argument constructor requires a positive denominator.
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return from_rational(BigRational(n, d));
}

bool FieldElement::is_zero() const {
  return field_.is_prime_field() ? res_ == 0 : rat_.is_zero();
}

bool FieldElement::is_one() const {
  return field_.is_prime_field() ? res_ == 1 : rat_ == 1;
}

std::int64_t FieldElement::residue() const {
  if (!field_.is_prime_field()) {
    throw UsageError("residue() is only defined over prime fields");
  }
  return res_;
}

const BigRational& FieldElement::rational() const {
  if (!field_.is_rationals()) {
    throw UsageError("rational() is only defined over the rationals");
  }
  return rat_;
}

std::string FieldElement::str() const {
  if (field_.is_prime_field()) return std::to_string(res_);
  const BigInt num = boost::multiprecision::numerator(rat_);
  const BigInt den = boost::multiprecision::denominator(rat_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) {
    throw DivisionByZeroError("division by zero in " + field_.name());
  }
  if (field_.is_rationals()) return from_rational(1 / rat_);
  std::int64_t x = 0;
  egcd_x(res_, field_.modulus(), x);
  return from_int(field_, x);
}

FieldElement inv(const FieldElement& a) { return a.inverse(); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  if (a.field_.is_rationals()) {
    return FieldElement::from_rational(a.rat_ + b.rat_);
  }
  std::int64_t p = a.field_.modulus();
  std::int64_t s = a.res_ + b.res_;
  return FieldElement(a.field_, s >= p ? s - p : s);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  if (a.field_.is_rationals()) {
    return FieldElement::from_rational(a.rat_ - b.rat_);
  }
  std::int64_t p = a.field_.modulus();
  std::int64_t s = a.res_ - b.res_;
  return FieldElement(a.field_, s < 0 ? s + p : s);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  if (a.field_.is_rationals()) {
    return FieldElement::from_rational(a.rat_ * b.rat_);
  }
  return FieldElement(a.field_, (a.res_ * b.res_) % a.field_.modulus());
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return a * b.inverse();
}

FieldElement operator-(const FieldElement& a) {
  return FieldElement::zero(a.field_) - a;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.field_ != b.field_) return false;
  return a.field_.is_prime_field() ? a.res_ == b.res_ : a.rat_ == b.rat_;
}

}  // namespace ktmod
