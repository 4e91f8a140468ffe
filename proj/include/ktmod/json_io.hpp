// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "ktmod/oracles.hpp"
#include "ktmod/persistence.hpp"
#include "ktmod/trivial_grading.hpp"

namespace ktmod {

using Json = nlohmann::json;

// Wire conventions: matrix entry lists are 1-based [row, col, coeff, deg];
// coefficients and big integers are emitted as strings (accepted as integral
// numbers too); infinite exponents and persistences are the string "inf";
// objects rely on nlohmann's sorted keys, so serialization is byte-stable.

Json load_json(const std::string& path);  // ParseError with position

FieldSpec field_spec_from_json(const Json& j);
Json to_json(FieldSpec f);

GradedMatrix graded_matrix_from_json(const Json& j);
Json to_json(const GradedMatrix& m);

PersistenceModule persistence_module_from_json(const Json& j);
Json to_json(const PersistenceModule& m);

// {"simplices":[{"vertices":[...],"time":n},...]}; an optional "field" key
// is returned separately so the CLI can apply --field overrides.
FilteredComplex filtration_from_json(const Json& j);
std::optional<FieldSpec> filtration_field_from_json(const Json& j);

TriviallyGradedModule zmodule_from_json(const Json& j);

Json to_json(const GradedSignature& sig);
Json to_json(const Barcode& bc);
Json to_json(const SmithNormalForm& snf);
Json to_json(const ReductionResult& r);

// Combined zmod report: prime powers, both decompositions, the verdict.
Json zmod_report_json(const TriviallyGradedModule& m);

Json selftest_report_json(std::uint64_t seed,
                          const std::vector<CheckResult>& checks);

// dump(2) plus trailing newline; the single serialization point.
std::string dump_json(const Json& j);

}  // namespace ktmod
