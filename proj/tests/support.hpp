// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <string>

#include "ktmod/graded_matrix.hpp"

namespace ktmod::test {

inline std::string data_path(const std::string& name) {
  return std::string(KTMOD_DATA_DIR) + "/" + name;
}

inline FieldElement fe(FieldSpec f, std::int64_t v) {
  return FieldElement::from_int(f, v);
}

inline Term tm(FieldSpec f, std::int64_t coeff, std::int64_t degree) {
  return Term::monomial(FieldElement::from_int(f, coeff), degree);
}

// The 2x2 worked example [[T, T^2], [1, T]] with generator degrees (0, 1)
// and relation degrees (1, 2). Both columns have low row 2, one column
// operation reduces it.
inline GradedMatrix worked_example(FieldSpec f) {
  return graded_matrix_from_entries(f, {0, 1}, {1, 2},
                                    {{0, 0, FieldElement::one(f), 1},
                                     {0, 1, FieldElement::one(f), 2},
                                     {1, 0, FieldElement::one(f), 0},
                                     {1, 1, FieldElement::one(f), 1}});
}

// Scratch input file, removed on destruction.
class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    static std::atomic<unsigned> counter{0};
    path_ = (std::filesystem::temp_directory_path() /
             ("ktmod_test_" + std::to_string(counter++) + ".json"))
                .string();
    std::ofstream out(path_);
    out << contents;
  }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace ktmod::test
