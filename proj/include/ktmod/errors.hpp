// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace ktmod {

// Base of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid input or misuse of a documented precondition. CLI exit code 1.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Malformed input text or JSON. CLI exit code 1.
class ParseError : public UsageError {
 public:
  using UsageError::UsageError;
};

// Operands drawn from different coefficient fields.
class FieldMismatchError : public UsageError {
 public:
  using UsageError::UsageError;
};

class DivisionByZeroError : public UsageError {
 public:
  using UsageError::UsageError;
};

// Term division with a degree obstruction (divisor degree exceeds dividend's).
class NonDivisibleError : public UsageError {
 public:
  using UsageError::UsageError;
};

// Generator or relation degree vector not weakly increasing, or negative.
class DegreeOrderError : public UsageError {
 public:
  using UsageError::UsageError;
};

// Matrix entry violating the degree law col_deg[k] == row_deg[j] + deg(entry).
class GradednessError : public UsageError {
 public:
  using UsageError::UsageError;
};

// Broken internal invariant; indicates a bug, not bad input. CLI exit code 2.
class InternalError : public Error {
 public:
  using Error::Error;
};

inline void internal_check(bool cond, const char* msg) {
  if (!cond) throw InternalError(msg);
}

}  // namespace ktmod
