// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#include "ktmod/presentation.hpp"

namespace ktmod {

void validate(const PersistenceModule& m) {
  if (m.dims.empty()) {
    throw UsageError("persistence module needs at least one level");
  }
  if (m.maps.size() + 1 != m.dims.size()) {
    throw UsageError("persistence module with " +
                     std::to_string(m.dims.size()) + " levels needs " +
                     std::to_string(m.dims.size() - 1) + " maps, got " +
                     std::to_string(m.maps.size()));
  }
  for (std::size_t n = 0; n < m.maps.size(); ++n) {
    if (m.maps[n].rows() != m.dims[n + 1] || m.maps[n].cols() != m.dims[n]) {
      throw UsageError("map " + std::to_string(n) + " -> " +
                       std::to_string(n + 1) + " must be " +
                       std::to_string(m.dims[n + 1]) + "x" +
                       std::to_string(m.dims[n]) + ", got " +
                       std::to_string(m.maps[n].rows()) + "x" +
                       std::to_string(m.maps[n].cols()));
    }
    for (std::size_t i = 0; i < m.maps[n].rows(); ++i) {
      for (std::size_t j = 0; j < m.maps[n].cols(); ++j) {
        if (m.maps[n](i, j).field() != m.field) {
          throw FieldMismatchError("map " + std::to_string(n) +
                                   " entry lies in " +
                                   m.maps[n](i, j).field().name() +
                                   ", module is over " + m.field.name());
        }
      }
    }
  }
}

PersistenceModule direct_sum(const PersistenceModule& a,
                             const PersistenceModule& b) {
  validate(a);
  validate(b);
  if (a.field != b.field) {
    throw FieldMismatchError("direct_sum: summands over different fields");
  }
  // Pad the shorter module with its stabilized tail (identity maps).
  PersistenceModule out;
  out.field = a.field;
  const std::size_t levels = std::max(a.dims.size(), b.dims.size());
  auto dim_at = [&](const PersistenceModule& m, std::size_t n) {
    return n < m.dims.size() ? m.dims[n] : m.dims.back();
  };
  auto map_at = [&](const PersistenceModule& m, std::size_t n) {
    return n < m.maps.size() ? m.maps[n]
                             : kmatrix_identity(m.field, m.dims.back());
  };
  for (std::size_t n = 0; n < levels; ++n) {
    out.dims.push_back(dim_at(a, n) + dim_at(b, n));
  }
  for (std::size_t n = 0; n + 1 < levels; ++n) {
    const KMatrix ma = map_at(a, n);
    const KMatrix mb = map_at(b, n);
    KMatrix block =
        kmatrix_zero(out.field, ma.rows() + mb.rows(), ma.cols() + mb.cols());
    for (std::size_t i = 0; i < ma.rows(); ++i) {
      for (std::size_t j = 0; j < ma.cols(); ++j) block(i, j) = ma(i, j);
    }
    for (std::size_t i = 0; i < mb.rows(); ++i) {
      for (std::size_t j = 0; j < mb.cols(); ++j) {
        block(ma.rows() + i, ma.cols() + j) = mb(i, j);
      }
    }
    out.maps.push_back(std::move(block));
  }
  return out;
}

GradedPresentation presentation_from_persistence(const PersistenceModule& m) {
  validate(m);
  const std::size_t levels = m.dims.size();  // levels 0..L stored
  // Ghost level L+1 repeats dim L with the identity map.
  std::vector<std::size_t> dims = m.dims;
  dims.push_back(m.dims.back());

  DegreeVec gen_degrees;
  std::vector<std::size_t> offset(dims.size(), 0);
  for (std::size_t n = 0; n < dims.size(); ++n) {
    offset[n] = gen_degrees.size();
    for (std::size_t i = 0; i < dims[n]; ++i) {
      gen_degrees.push_back(static_cast<std::int64_t>(n));
    }
  }

  auto map_entry = [&](std::size_t n, std::size_t row, std::size_t col) {
    if (n < m.maps.size()) return m.maps[n](row, col);
    // Ghost identity from level L to L+1.
    return row == col ? FieldElement::one(m.field)
                      : FieldElement::zero(m.field);
  };

  DegreeVec rel_degrees;
  std::vector<TermEntry> entries;
  std::size_t col = 0;
  // Relation per level-n generator: T*g_i^(n) - sum_j f[n](j,i) g_j^(n+1),
  // homogeneous of degree n+1.
  for (std::size_t n = 0; n + 1 < dims.size(); ++n) {
    for (std::size_t i = 0; i < dims[n]; ++i) {
      rel_degrees.push_back(static_cast<std::int64_t>(n + 1));
      entries.push_back(
          TermEntry{offset[n] + i, col, FieldElement::one(m.field), 1});
      for (std::size_t j = 0; j < dims[n + 1]; ++j) {
        const FieldElement c = map_entry(n, j, i);
        if (!c.is_zero()) {
          entries.push_back(TermEntry{offset[n + 1] + j, col, -c, 0});
        }
      }
      ++col;
    }
  }
  (void)levels;
  return GradedPresentation{graded_matrix_from_entries(
      m.field, std::move(gen_degrees), std::move(rel_degrees), entries)};
}

GradedSignature decompose(const GradedPresentation& p) {
  return quotient_signature(reduce(p.matrix).reduced);
}

GradedSignature persistence_signature(const PersistenceModule& m) {
  const std::int64_t top_level =
      static_cast<std::int64_t>(m.dims.size()) - 1;
  const GradedSignature raw = decompose(presentation_from_persistence(m));
  GradedSignature sig;
  for (const Summand& s : raw.summands()) {
    if (!s.exponent.is_infinite() &&
        s.shift + s.exponent.value() > top_level) {
      // Support reaches past the stored prefix: stabilization reads it as
      // never dying.
      sig.add(Summand{s.shift, TorsionExponent::infinity()});
    } else {
      sig.add(s);
    }
  }
  return sig;
}

}  // namespace ktmod
