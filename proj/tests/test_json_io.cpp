// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "ktmod/json_io.hpp"
#include "support.hpp"

using namespace ktmod;
using ktmod::test::data_path;
using ktmod::test::worked_example;

TEST_CASE("field specs round trip") {
  CHECK(field_spec_from_json(R"({"field":"q"})"_json) ==
        FieldSpec::rationals());
  CHECK(field_spec_from_json(R"({"field":"gf","p":7})"_json) ==
        FieldSpec::gf(7));
  CHECK(to_json(FieldSpec::gf(5)) == R"({"field":"gf","p":5})"_json);
  CHECK(to_json(FieldSpec::rationals()) == R"({"field":"q"})"_json);
  CHECK_THROWS_AS(field_spec_from_json(R"({"field":"gf"})"_json), ParseError);
  CHECK_THROWS_AS(field_spec_from_json(R"({"field":"zz"})"_json), ParseError);
  CHECK_THROWS_AS(field_spec_from_json(R"({})"_json), ParseError);
  CHECK_THROWS_AS(field_spec_from_json(R"({"field":"gf","p":6})"_json),
                  UsageError);
}

TEST_CASE("graded matrices round trip through the wire format") {
  const Json j = load_json(data_path("running_example.json"));
  const GradedMatrix m = graded_matrix_from_json(j);
  CHECK(m == worked_example(FieldSpec::gf(2)));
  CHECK(graded_matrix_from_json(to_json(m)) == m);
  CHECK(to_json(m) == j);

  // Integer coefficients are accepted alongside strings.
  const GradedMatrix numeric = graded_matrix_from_json(
      R"({"field":"gf","p":5,"row_degrees":[0],"col_degrees":[1],
          "entries":[[1,1,7,1]]})"_json);
  CHECK(numeric.at(0, 0) == ktmod::test::tm(FieldSpec::gf(5), 2, 1));
}

TEST_CASE("matrix parse errors name the offender") {
  CHECK_THROWS_AS(graded_matrix_from_json(R"({"field":"q"})"_json),
                  ParseError);
  // 0-based indices on the wire are rejected, the format is 1-based.
  CHECK_THROWS_AS(
      graded_matrix_from_json(
          R"({"field":"q","row_degrees":[0],"col_degrees":[1],
              "entries":[[0,1,"1",1]]})"_json),
      ParseError);
  // Degree-law violations surface from construction.
  CHECK_THROWS_AS(
      graded_matrix_from_json(
          R"({"field":"q","row_degrees":[0],"col_degrees":[1],
              "entries":[[1,1,"1",2]]})"_json),
      GradednessError);
  CHECK_THROWS_AS(
      graded_matrix_from_json(
          R"({"field":"q","row_degrees":[0],"col_degrees":[1],
              "entries":[[1,1,"1"]]})"_json),
      ParseError);
}

TEST_CASE("persistence modules round trip") {
  const Json j = load_json(data_path("persistence_example.json"));
  const PersistenceModule m = persistence_module_from_json(j);
  CHECK(m.dims == std::vector<std::size_t>{1, 1, 0});
  REQUIRE(m.maps.size() == 2);
  CHECK(m.maps[0](0, 0).is_one());
  CHECK(to_json(m) == j);

  CHECK_THROWS_AS(persistence_module_from_json(
                      R"({"field":"q","dims":[],"maps":[]})"_json),
                  ParseError);
  CHECK_THROWS_AS(persistence_module_from_json(
                      R"({"field":"q","dims":[1],"maps":[[["1"]]]})"_json),
                  ParseError);
  CHECK_THROWS_AS(
      persistence_module_from_json(
          R"({"field":"q","dims":[1,2],"maps":[[["1"]]]})"_json),
      ParseError);
}

TEST_CASE("filtrations parse with optional field overrides") {
  const Json j = load_json(data_path("triangle_filtration.json"));
  const FilteredComplex c = filtration_from_json(j);
  CHECK(c.simplices().size() == 7);
  CHECK(c.max_time() == 2);
  CHECK(!filtration_field_from_json(j).has_value());

  const Json with_field = R"({"field":"gf","p":5,
      "simplices":[{"vertices":[0],"time":0}]})"_json;
  CHECK(filtration_field_from_json(with_field) == FieldSpec::gf(5));

  // Real-valued entry times are out of scope and say so.
  try {
    filtration_from_json(
        R"({"simplices":[{"vertices":[0],"time":0.5}]})"_json);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("natural") != std::string::npos);
  }
  CHECK_THROWS_AS(
      filtration_from_json(R"({"simplices":[{"vertices":[0]}]})"_json),
      ParseError);
  CHECK_THROWS_AS(
      filtration_from_json(R"({"simplices":[{"time":1}]})"_json), ParseError);
}

TEST_CASE("integer module wire format") {
  const TriviallyGradedModule m =
      zmodule_from_json(load_json(data_path("zmod_counterexample.json")));
  REQUIRE(m.components.size() == 2);
  CHECK(m.components.at(0)(0, 0) == BigInt(2));
  CHECK(m.components.at(1)(0, 0) == BigInt(3));

  // Negative degrees, numeric entries, bignum strings.
  const TriviallyGradedModule n = zmodule_from_json(
      R"({"ring":"Z","components":{"-3":{"rows":1,"cols":2,
          "entries":[[-4,"1000000000000000000000"]]}}})"_json);
  CHECK(n.components.at(-3)(0, 0) == BigInt(-4));
  CHECK(n.components.at(-3)(0, 1) == BigInt("1000000000000000000000"));

  CHECK_THROWS_AS(zmodule_from_json(R"({"ring":"R","components":{}})"_json),
                  ParseError);
  CHECK_THROWS_AS(
      zmodule_from_json(
          R"({"ring":"Z","components":{"x":{"rows":0,"cols":0,"entries":[]}}})"_json),
      ParseError);
  CHECK_THROWS_AS(
      zmodule_from_json(
          R"({"ring":"Z","components":{"0":{"rows":1,"cols":1,"entries":[["a"]]}}})"_json),
      ParseError);
}

TEST_CASE("output serializations") {
  const GradedSignature sig = GradedSignature::of({
      {0, TorsionExponent::infinity()},
      {1, TorsionExponent::finite(2)},
  });
  CHECK(to_json(sig) == R"({"signature":[[0,"inf"],[1,2]]})"_json);
  CHECK(to_json(GradedSignature()) == R"({"signature":[]})"_json);

  const Barcode bc = Barcode::of({{1, 2}, {0, kInfinity}});
  CHECK(to_json(bc) ==
        R"({"bars":[{"birth":0,"persistence":"inf"},
                    {"birth":1,"persistence":2}]})"_json);

  const ReductionResult r = reduce(worked_example(FieldSpec::gf(2)));
  const Json rj = to_json(r);
  CHECK(rj.at("axpy_count") == 1);
  CHECK(rj.at("passes") == 1);
  CHECK(rj.at("low_map") == R"([[1,2]])"_json);
  CHECK(graded_matrix_from_json(rj.at("reduced")) == r.reduced);
  CHECK(graded_matrix_from_json(rj.at("transform")) == r.transform);

  const SmithNormalForm snf = to_smith_normal_form(r.reduced);
  CHECK(to_json(snf) == R"({"diagonal":[["1",0]],"rank":1})"_json);
}

TEST_CASE("serialization is deterministic with sorted keys") {
  const Json j = R"({"zeta":1,"alpha":{"b":2,"a":3}})"_json;
  CHECK(dump_json(j) ==
        "{\n  \"alpha\": {\n    \"a\": 3,\n    \"b\": 2\n  },\n"
        "  \"zeta\": 1\n}\n");
}

TEST_CASE("load_json reports position on malformed input") {
  ktmod::test::TempFile bad("{\"a\": [1, }");
  try {
    load_json(bad.path());
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("parse error") != std::string::npos);
  }
  CHECK_THROWS_AS(load_json("/nonexistent/nowhere.json"), ParseError);
}
