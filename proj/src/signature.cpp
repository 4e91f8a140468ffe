// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#include "ktmod/signature.hpp"

#include <algorithm>

namespace ktmod {

TorsionExponent TorsionExponent::finite(std::int64_t k) {
  if (k < 1 || k == kInfinity) {
    throw UsageError("finite torsion exponent must satisfy k >= 1, got " +
                     std::to_string(k));
  }
  return TorsionExponent(k);
}

std::int64_t TorsionExponent::value() const {
  if (is_infinite()) {
    throw UsageError("value() called on an infinite torsion exponent");
  }
  return v_;
}

std::string TorsionExponent::str() const {
  return is_infinite() ? "inf" : std::to_string(v_);
}

GradedSignature GradedSignature::of(std::vector<Summand> summands) {
  std::sort(summands.begin(), summands.end());
  GradedSignature sig;
  sig.summands_ = std::move(summands);
  return sig;
}

void GradedSignature::add(Summand s) {
  summands_.insert(std::upper_bound(summands_.begin(), summands_.end(), s), s);
}

std::string GradedSignature::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < summands_.size(); ++i) {
    if (i > 0) out += ", ";
    out += "(" + std::to_string(summands_[i].shift) + "," +
           summands_[i].exponent.str() + ")";
  }
  return out + "}";
}

std::int64_t signature_hilbert_dim(const GradedSignature& sig,
                                   std::int64_t d) {
  std::int64_t dim = 0;
  for (const Summand& s : sig.summands()) {
    if (s.shift > d) continue;
    if (s.exponent.is_infinite() || d < s.shift + s.exponent.value()) ++dim;
  }
  return dim;
}

GradedSignature signature_union(const GradedSignature& a,
                                const GradedSignature& b) {
  std::vector<Summand> merged = a.summands();
  merged.insert(merged.end(), b.summands().begin(), b.summands().end());
  return GradedSignature::of(std::move(merged));
}

}  // namespace ktmod
