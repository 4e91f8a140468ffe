// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#include "ktmod/persistence.hpp"

#include <algorithm>
#include <map>

namespace ktmod {
namespace {

std::string simplex_str(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(s.vertices[i]);
  }
  return out + "}";
}

}  // namespace

FilteredComplex FilteredComplex::from_simplices(std::vector<Simplex> simplices) {
  for (Simplex& s : simplices) {
    if (s.vertices.empty()) {
      throw UsageError("simplices need at least one vertex");
    }
    if (s.time < 0) {
      throw UsageError("simplex " + simplex_str(s) +
                       " has negative entry time " + std::to_string(s.time));
    }
    for (std::int64_t v : s.vertices) {
      if (v < 0) {
        throw UsageError("simplex " + simplex_str(s) +
                         " has a negative vertex label");
      }
    }
    std::sort(s.vertices.begin(), s.vertices.end());
    if (std::adjacent_find(s.vertices.begin(), s.vertices.end()) !=
        s.vertices.end()) {
      throw UsageError("simplex " + simplex_str(s) + " repeats a vertex");
    }
  }
  // Global order: dimension, then lexicographic vertex list. Deterministic
  // bases everywhere downstream hang off this order.
  std::sort(simplices.begin(), simplices.end(),
            [](const Simplex& a, const Simplex& b) {
              if (a.vertices.size() != b.vertices.size()) {
                return a.vertices.size() < b.vertices.size();
              }
              return a.vertices < b.vertices;
            });
  std::map<std::vector<std::int64_t>, std::int64_t> times;
  for (const Simplex& s : simplices) {
    if (!times.emplace(s.vertices, s.time).second) {
      throw UsageError("simplex " + simplex_str(s) + " appears twice");
    }
  }
  for (const Simplex& s : simplices) {
    if (s.dimension() == 0) continue;
    std::vector<std::int64_t> facet(s.vertices.begin(), s.vertices.end() - 1);
    for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
      facet.clear();
      for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        if (i != drop) facet.push_back(s.vertices[i]);
      }
      auto it = times.find(facet);
      if (it == times.end()) {
        throw UsageError("closure violation: simplex " + simplex_str(s) +
                         " lacks its facet " +
                         simplex_str(Simplex{facet, 0}));
      }
      if (it->second > s.time) {
        throw UsageError("closure violation: facet " +
                         simplex_str(Simplex{facet, 0}) + " enters at " +
                         std::to_string(it->second) + ", after its coface " +
                         simplex_str(s) + " at " + std::to_string(s.time));
      }
    }
  }
  FilteredComplex c;
  c.simplices_ = std::move(simplices);
  for (const Simplex& s : c.simplices_) {
    c.max_time_ = std::max(c.max_time_, s.time);
    c.max_dimension_ = std::max(c.max_dimension_, s.dimension());
  }
  return c;
}

namespace {

// Simplices of one dimension in global order, with entry times.
struct Layer {
  std::vector<const Simplex*> simplices;
  std::map<std::vector<std::int64_t>, std::size_t> index;
};

Layer layer_of(const FilteredComplex& c, int dimension) {
  Layer layer;
  if (dimension < 0) return layer;
  for (const Simplex& s : c.simplices()) {
    if (s.dimension() == dimension) {
      layer.index.emplace(s.vertices, layer.simplices.size());
      layer.simplices.push_back(&s);
    }
  }
  return layer;
}

std::vector<std::size_t> present_at(const Layer& layer, std::int64_t level) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < layer.simplices.size(); ++i) {
    if (layer.simplices[i]->time <= level) out.push_back(i);
  }
  return out;
}

// Boundary column of one q-simplex in level coordinates given by the rows
// argument (facet global index -> row position). Signs alternate over the
// ascending vertex list.
Vec boundary_column(FieldSpec field, const Layer& facets,
                    const std::map<std::size_t, std::size_t>& rows,
                    const Simplex& s) {
  Vec col(rows.size(), FieldElement::zero(field));
  if (s.dimension() == 0) return col;
  std::vector<std::int64_t> facet;
  for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
    facet.clear();
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
      if (i != drop) facet.push_back(s.vertices[i]);
    }
    const std::size_t global = facets.index.at(facet);
    auto row = rows.find(global);
    internal_check(row != rows.end(), "boundary facet missing at its level");
    const FieldElement sign = FieldElement::from_int(
        field, drop % 2 == 0 ? 1 : -1);
    col[row->second] = col[row->second] + sign;
  }
  return col;
}

struct LevelHomology {
  std::vector<Vec> representatives;  // cycle reps in level q-coordinates
  std::vector<std::size_t> chart;    // present q-simplices (global indices)
};

}  // namespace

PersistenceModule homology_persistence_module(const FilteredComplex& c,
                                              int degree, FieldSpec field) {
  if (degree < 0) throw UsageError("homology degree must be >= 0");
  const Layer faces = layer_of(c, degree - 1);
  const Layer cells = layer_of(c, degree);
  const Layer cofaces = layer_of(c, degree + 1);

  PersistenceModule module;
  module.field = field;

  std::vector<LevelHomology> levels;
  for (std::int64_t level = 0; level <= c.max_time(); ++level) {
    const std::vector<std::size_t> cell_chart = present_at(cells, level);
    std::map<std::size_t, std::size_t> face_rows;
    for (std::size_t global : present_at(faces, level)) {
      face_rows.emplace(global, face_rows.size());
    }

    // Cycles: kernel of the boundary map on present q-simplices.
    std::vector<Vec> cycles;
    {
      SpanSolver boundary_span(field, face_rows.size());
      std::vector<Vec> columns;
      for (std::size_t idx : cell_chart) {
        columns.push_back(boundary_column(field, faces, face_rows,
                                          *cells.simplices[idx]));
      }
      for (std::size_t j = 0; j < columns.size(); ++j) {
        if (auto dep = boundary_span.insert(columns[j])) {
          Vec cycle(cell_chart.size(), FieldElement::zero(field));
          cycle[j] = FieldElement::one(field);
          for (std::size_t i = 0; i < dep->size(); ++i) {
            cycle[i] = -(*dep)[i];
          }
          cycles.push_back(std::move(cycle));
        }
      }
    }

    // Boundaries from present (q+1)-simplices, then homology representatives:
    // the cycle basis vectors that grow the span past the boundaries.
    std::map<std::size_t, std::size_t> cell_rows;
    for (std::size_t i = 0; i < cell_chart.size(); ++i) {
      cell_rows.emplace(cell_chart[i], i);
    }
    SpanSolver quotient_span(field, cell_chart.size());
    for (std::size_t idx : present_at(cofaces, level)) {
      quotient_span.insert(boundary_column(field, cells, cell_rows,
                                           *cofaces.simplices[idx]));
    }
    LevelHomology homology;
    homology.chart = cell_chart;
    for (Vec& z : cycles) {
      if (!quotient_span.insert(z)) {
        homology.representatives.push_back(std::move(z));
      }
    }
    module.dims.push_back(homology.representatives.size());
    levels.push_back(std::move(homology));
  }

  // Induced maps: include each representative into the next level's
  // coordinates and express it over [boundaries | representatives] there.
  for (std::int64_t level = 0; level + 1 <= c.max_time(); ++level) {
    const LevelHomology& from = levels[level];
    const LevelHomology& to = levels[level + 1];
    std::map<std::size_t, std::size_t> to_rows;
    for (std::size_t i = 0; i < to.chart.size(); ++i) {
      to_rows.emplace(to.chart[i], i);
    }
    SpanSolver solver(field, to.chart.size());
    std::size_t boundary_count = 0;
    for (std::size_t idx : present_at(cofaces, level + 1)) {
      solver.insert(boundary_column(field, cells, to_rows,
                                    *cofaces.simplices[idx]));
      ++boundary_count;
    }
    for (const Vec& rep : to.representatives) solver.insert(rep);

    KMatrix map = kmatrix_zero(field, to.representatives.size(),
                               from.representatives.size());
    for (std::size_t j = 0; j < from.representatives.size(); ++j) {
      Vec included(to.chart.size(), FieldElement::zero(field));
      for (std::size_t i = 0; i < from.chart.size(); ++i) {
        included[to_rows.at(from.chart[i])] = from.representatives[j][i];
      }
      auto coords = solver.express(included);
      internal_check(coords.has_value(),
                     "included cycle left the homology span");
      for (std::size_t i = 0; i < to.representatives.size(); ++i) {
        map(i, j) = (*coords)[boundary_count + i];
      }
    }
    module.maps.push_back(std::move(map));
  }
  return module;
}

std::int64_t betti_number(const FilteredComplex& c, int degree,
                          std::int64_t level, FieldSpec field) {
  if (degree < 0) throw UsageError("homology degree must be >= 0");
  const Layer faces = layer_of(c, degree - 1);
  const Layer cells = layer_of(c, degree);
  const Layer cofaces = layer_of(c, degree + 1);

  std::map<std::size_t, std::size_t> face_rows;
  for (std::size_t global : present_at(faces, level)) {
    face_rows.emplace(global, face_rows.size());
  }
  const std::vector<std::size_t> cell_chart = present_at(cells, level);

  SpanSolver boundary_rank(field, face_rows.size());
  for (std::size_t idx : cell_chart) {
    boundary_rank.insert(
        boundary_column(field, faces, face_rows, *cells.simplices[idx]));
  }
  std::map<std::size_t, std::size_t> cell_rows;
  for (std::size_t i = 0; i < cell_chart.size(); ++i) {
    cell_rows.emplace(cell_chart[i], i);
  }
  SpanSolver coboundary_rank(field, cell_chart.size());
  for (std::size_t idx : present_at(cofaces, level)) {
    coboundary_rank.insert(
        boundary_column(field, cells, cell_rows, *cofaces.simplices[idx]));
  }
  // dim ker - rank of the incoming boundary.
  return static_cast<std::int64_t>(cell_chart.size()) -
         static_cast<std::int64_t>(boundary_rank.rank()) -
         static_cast<std::int64_t>(coboundary_rank.rank());
}

std::int64_t death_stage(const Bar& b) {
  if (b.persistence == kInfinity) return kInfinity;
  return b.birth + b.persistence + 1;
}

Barcode Barcode::of(std::vector<Bar> bars) {
  std::sort(bars.begin(), bars.end());
  Barcode bc;
  bc.bars_ = std::move(bars);
  return bc;
}

void Barcode::add(Bar b) {
  bars_.insert(std::upper_bound(bars_.begin(), bars_.end(), b), b);
}

std::string Barcode::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < bars_.size(); ++i) {
    if (i > 0) out += ", ";
    out += "(" + std::to_string(bars_[i].birth) + "," +
           (bars_[i].persistence == kInfinity
                ? std::string("inf")
                : std::to_string(bars_[i].persistence)) +
           ")";
  }
  return out + "}";
}

Barcode barcode_from_signature(const GradedSignature& sig) {
  Barcode bc;
  for (const Summand& s : sig.summands()) {
    if (s.exponent.is_infinite()) {
      bc.add(Bar{s.shift, kInfinity});
    } else {
      bc.add(Bar{s.shift, s.exponent.value() - 1});
    }
  }
  return bc;
}

std::int64_t bars_alive_at(const Barcode& bc, std::int64_t stage) {
  std::int64_t alive = 0;
  for (const Bar& b : bc.bars()) {
    if (b.birth > stage) continue;
    if (b.persistence == kInfinity || stage <= b.birth + b.persistence) {
      ++alive;
    }
  }
  return alive;
}

Barcode persistent_homology(const FilteredComplex& c, int degree,
                            FieldSpec field) {
  return barcode_from_signature(
      persistence_signature(homology_persistence_module(c, degree, field)));
}

}  // namespace ktmod
