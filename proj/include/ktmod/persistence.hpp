// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ktmod/presentation.hpp"

namespace ktmod {

// Simplex with its entry stage. Vertices are distinct nonnegative labels,
// kept sorted ascending (the orientation convention).
struct Simplex {
  std::vector<std::int64_t> vertices;
  std::int64_t time = 0;

  int dimension() const { return static_cast<int>(vertices.size()) - 1; }
};

// Finite filtered simplicial complex over integer stages. Validation on
// construction: sorted distinct vertices, natural entry times, no duplicate
// simplices, and closure (every facet present no later than its coface).
class FilteredComplex {
 public:
  static FilteredComplex from_simplices(std::vector<Simplex> simplices);

  const std::vector<Simplex>& simplices() const { return simplices_; }
  std::int64_t max_time() const { return max_time_; }  // 0 when empty
  int max_dimension() const { return max_dimension_; }  // -1 when empty

 private:
  FilteredComplex() = default;
  std::vector<Simplex> simplices_;
  std::int64_t max_time_ = 0;
  int max_dimension_ = -1;
};

// Degree-q homology of the level filtration as a persistence module over
// levels 0..max_time, with the maps induced by inclusion. Deterministic
// representative choices (global lexicographic simplex order, first-nonzero
// pivots).
PersistenceModule homology_persistence_module(const FilteredComplex& c,
                                              int degree, FieldSpec field);

// dim H_degree at one level, computed directly from boundary ranks.
std::int64_t betti_number(const FilteredComplex& c, int degree,
                          std::int64_t level, FieldSpec field);

// Interval [birth, birth + persistence] of stages a class is alive;
// persistence == kInfinity for a class that never dies. A finite bar's death
// stage is birth + persistence + 1 (the elder class absorbs the younger one
// when they merge).
struct Bar {
  std::int64_t birth = 0;
  std::int64_t persistence = 0;

  friend auto operator<=>(const Bar&, const Bar&) = default;
};

std::int64_t death_stage(const Bar& b);  // kInfinity for infinite bars

// Multiset of bars in canonical order (birth, then persistence, infinite
// last).
class Barcode {
 public:
  Barcode() = default;
  static Barcode of(std::vector<Bar> bars);

  void add(Bar b);
  const std::vector<Bar>& bars() const { return bars_; }
  bool empty() const { return bars_.empty(); }
  std::size_t size() const { return bars_.size(); }

  std::string str() const;

  friend bool operator==(const Barcode&, const Barcode&) = default;

 private:
  std::vector<Bar> bars_;
};

// Signature summand (n, k) becomes the bar born at n with persistence k - 1.
Barcode barcode_from_signature(const GradedSignature& sig);

std::int64_t bars_alive_at(const Barcode& bc, std::int64_t stage);

// Full pipeline: levelwise homology -> presentation -> reduction -> barcode.
Barcode persistent_homology(const FilteredComplex& c, int degree,
                            FieldSpec field);

}  // namespace ktmod
