// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "ktmod/linalg.hpp"
#include "ktmod/reduction.hpp"

namespace ktmod {

// Finite prefix of a persistence module: vector space dimensions at levels
// 0..L and the structure maps between consecutive levels. Beyond level L the
// module is read as stabilized (identity maps).
struct PersistenceModule {
  FieldSpec field = FieldSpec::rationals();
  std::vector<std::size_t> dims;  // at least one level
  std::vector<KMatrix> maps;      // maps[n] is dims[n+1] x dims[n]
};

// Shape and field consistency; throws UsageError.
void validate(const PersistenceModule& m);

PersistenceModule direct_sum(const PersistenceModule& a,
                             const PersistenceModule& b);

// Presentation of a graded module: rows are generators, columns relations.
struct GradedPresentation {
  GradedMatrix matrix;

  const DegreeVec& generator_degrees() const { return matrix.row_degrees(); }
  const DegreeVec& relation_degrees() const { return matrix.col_degrees(); }
};

// Homogeneous presentation of the graded module carried by a persistence
// module. Level-n basis vectors become generators of degree n; each one
// contributes the relation T*g - (its image under the level map). The
// stabilized tail is encoded by one ghost level L+1 with the identity map,
// whose generators absorb the level-L relations.
GradedPresentation presentation_from_persistence(const PersistenceModule& m);

GradedSignature decompose(const GradedPresentation& p);

// decompose() of the ghost-level presentation, with any torsion exponent
// reaching past level L read back as infinite (the stored prefix cannot
// witness a death beyond it).
GradedSignature persistence_signature(const PersistenceModule& m);

}  // namespace ktmod
