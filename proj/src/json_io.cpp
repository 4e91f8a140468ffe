// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#include "ktmod/json_io.hpp"

#include <fstream>

namespace ktmod {
namespace {

const Json& require_key(const Json& j, const char* key, const char* context) {
  if (!j.is_object()) {
    throw ParseError(std::string(context) + ": expected a JSON object");
  }
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(std::string(context) + ": missing key \"" + key + "\"");
  }
  return *it;
}

std::int64_t int_from_json(const Json& j, const char* context) {
  if (j.is_number_integer() || j.is_number_unsigned()) {
    return j.get<std::int64_t>();
  }
  if (j.is_number_float()) {
    throw ParseError(std::string(context) +
                     ": expected an integer, got a non-integral number " +
                     "(only natural gradings are in scope)");
  }
  throw ParseError(std::string(context) + ": expected an integer");
}

std::string coeff_string_from_json(const Json& j, const char* context) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer() || j.is_number_unsigned()) {
    return std::to_string(j.get<std::int64_t>());
  }
  throw ParseError(std::string(context) +
                   ": expected a coefficient string or integer");
}

BigInt bigint_from_json(const Json& j, const char* context) {
  const std::string text = coeff_string_from_json(j, context);
  std::string_view s = text;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty() ||
      s.find_first_not_of("0123456789") != std::string_view::npos) {
    throw ParseError(std::string(context) + ": invalid integer '" + text +
                     "'");
  }
  return BigInt(text.front() == '+' ? text.substr(1) : text);
}

DegreeVec degrees_from_json(const Json& j, const char* context) {
  if (!j.is_array()) {
    throw ParseError(std::string(context) + ": expected an array of degrees");
  }
  DegreeVec out;
  for (const Json& d : j) out.push_back(int_from_json(d, context));
  return out;
}

}  // namespace

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

FieldSpec field_spec_from_json(const Json& j) {
  const Json& kind = require_key(j, "field", "field spec");
  if (!kind.is_string()) {
    throw ParseError("field spec: \"field\" must be \"gf\" or \"q\"");
  }
  const std::string name = kind.get<std::string>();
  if (name == "q") return FieldSpec::rationals();
  if (name == "gf") {
    return FieldSpec::gf(
        int_from_json(require_key(j, "p", "field spec"), "field spec p"));
  }
  throw ParseError("field spec: unknown field \"" + name + "\"");
}

Json to_json(FieldSpec f) {
  Json j;
  if (f.is_rationals()) {
    j["field"] = "q";
  } else {
    j["field"] = "gf";
    j["p"] = f.modulus();
  }
  return j;
}

GradedMatrix graded_matrix_from_json(const Json& j) {
  const FieldSpec field = field_spec_from_json(j);
  DegreeVec row_degrees =
      degrees_from_json(require_key(j, "row_degrees", "matrix"), "row degree");
  DegreeVec col_degrees = degrees_from_json(
      require_key(j, "col_degrees", "matrix"), "column degree");
  const Json& entries = require_key(j, "entries", "matrix");
  if (!entries.is_array()) {
    throw ParseError("matrix: \"entries\" must be an array");
  }
  std::vector<TermEntry> parsed;
  for (const Json& e : entries) {
    if (!e.is_array() || e.size() != 4) {
      throw ParseError("matrix entry must be [row, col, coeff, degree]");
    }
    const std::int64_t row = int_from_json(e[0], "entry row");
    const std::int64_t col = int_from_json(e[1], "entry col");
    if (row < 1 || col < 1) {
      throw ParseError("matrix entry indices are 1-based; got (" +
                       std::to_string(row) + "," + std::to_string(col) + ")");
    }
    parsed.push_back(TermEntry{
        static_cast<std::size_t>(row - 1), static_cast<std::size_t>(col - 1),
        FieldElement::parse(field, coeff_string_from_json(e[2], "entry coeff")),
        int_from_json(e[3], "entry degree")});
  }
  return graded_matrix_from_entries(field, std::move(row_degrees),
                                    std::move(col_degrees), parsed);
}

Json to_json(const GradedMatrix& m) {
  Json j = to_json(m.field());
  j["row_degrees"] = m.row_degrees();
  j["col_degrees"] = m.col_degrees();
  Json entries = Json::array();
  for (std::size_t row = 0; row < m.rows(); ++row) {
    for (std::size_t col = 0; col < m.cols(); ++col) {
      const Term& t = m.at(row, col);
      if (t.is_zero()) continue;
      entries.push_back(Json::array(
          {row + 1, col + 1, t.coeff().str(), t.degree()}));
    }
  }
  j["entries"] = std::move(entries);
  return j;
}

PersistenceModule persistence_module_from_json(const Json& j) {
  PersistenceModule m;
  m.field = field_spec_from_json(j);
  const Json& dims = require_key(j, "dims", "persistence module");
  if (!dims.is_array() || dims.empty()) {
    throw ParseError(
        "persistence module: \"dims\" must be a nonempty array");
  }
  for (const Json& d : dims) {
    const std::int64_t v = int_from_json(d, "persistence module dim");
    if (v < 0) throw ParseError("persistence module dims must be >= 0");
    m.dims.push_back(static_cast<std::size_t>(v));
  }
  const Json& maps = require_key(j, "maps", "persistence module");
  if (!maps.is_array()) {
    throw ParseError("persistence module: \"maps\" must be an array");
  }
  for (std::size_t n = 0; n < maps.size(); ++n) {
    if (n + 1 >= m.dims.size()) {
      throw ParseError("persistence module has more maps than level gaps");
    }
    const std::size_t rows = m.dims[n + 1];
    const std::size_t cols = m.dims[n];
    const Json& map_json = maps[n];
    if (!map_json.is_array()) {
      throw ParseError("persistence module map must be an array of rows");
    }
    KMatrix map = kmatrix_zero(m.field, rows, cols);
    if (!(map_json.empty() && (rows == 0 || cols == 0))) {
      if (map_json.size() != rows) {
        throw ParseError("map " + std::to_string(n) + " needs " +
                         std::to_string(rows) + " rows, got " +
                         std::to_string(map_json.size()));
      }
      for (std::size_t r = 0; r < rows; ++r) {
        const Json& row = map_json[r];
        if (!row.is_array() || row.size() != cols) {
          throw ParseError("map " + std::to_string(n) + " row " +
                           std::to_string(r + 1) + " needs " +
                           std::to_string(cols) + " entries");
        }
        for (std::size_t c = 0; c < cols; ++c) {
          map(r, c) = FieldElement::parse(
              m.field, coeff_string_from_json(row[c], "map entry"));
        }
      }
    }
    m.maps.push_back(std::move(map));
  }
  validate(m);
  return m;
}

Json to_json(const PersistenceModule& m) {
  Json j = to_json(m.field);
  j["dims"] = m.dims;
  Json maps = Json::array();
  for (const KMatrix& map : m.maps) {
    Json rows = Json::array();
    if (map.rows() > 0 && map.cols() > 0) {
      for (std::size_t r = 0; r < map.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < map.cols(); ++c) {
          row.push_back(map(r, c).str());
        }
        rows.push_back(std::move(row));
      }
    }
    maps.push_back(std::move(rows));
  }
  j["maps"] = std::move(maps);
  return j;
}

FilteredComplex filtration_from_json(const Json& j) {
  const Json& simplices = require_key(j, "simplices", "filtration");
  if (!simplices.is_array()) {
    throw ParseError("filtration: \"simplices\" must be an array");
  }
  std::vector<Simplex> parsed;
  for (const Json& s : simplices) {
    const Json& vertices = require_key(s, "vertices", "simplex");
    if (!vertices.is_array() || vertices.empty()) {
      throw ParseError("simplex: \"vertices\" must be a nonempty array");
    }
    Simplex simplex;
    for (const Json& v : vertices) {
      simplex.vertices.push_back(int_from_json(v, "simplex vertex"));
    }
    const Json& time = require_key(s, "time", "simplex");
    if (time.is_number_float()) {
      throw ParseError(
          "simplex entry times must be natural numbers; real-valued "
          "filtrations are outside the natural-grading scope");
    }
    simplex.time = int_from_json(time, "simplex time");
    parsed.push_back(std::move(simplex));
  }
  return FilteredComplex::from_simplices(std::move(parsed));
}

std::optional<FieldSpec> filtration_field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("field")) return std::nullopt;
  return field_spec_from_json(j);
}

TriviallyGradedModule zmodule_from_json(const Json& j) {
  const Json& ring = require_key(j, "ring", "module");
  if (!ring.is_string() || ring.get<std::string>() != "Z") {
    throw ParseError("module: \"ring\" must be \"Z\"");
  }
  const Json& components = require_key(j, "components", "module");
  if (!components.is_object()) {
    throw ParseError("module: \"components\" must map degrees to matrices");
  }
  TriviallyGradedModule m;
  for (const auto& [key, value] : components.items()) {
    std::int64_t degree = 0;
    try {
      std::size_t used = 0;
      degree = std::stoll(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError("module: component key \"" + key +
                       "\" is not an integer degree");
    }
    const std::int64_t rows =
        int_from_json(require_key(value, "rows", "component"), "rows");
    const std::int64_t cols =
        int_from_json(require_key(value, "cols", "component"), "cols");
    if (rows < 0 || cols < 0) {
      throw ParseError("component dimensions must be >= 0");
    }
    const Json& entries = require_key(value, "entries", "component");
    IntegerMatrix matrix(static_cast<std::size_t>(rows),
                         static_cast<std::size_t>(cols), BigInt(0));
    if (!(entries.is_array() && entries.empty() && (rows == 0 || cols == 0))) {
      if (!entries.is_array() ||
          entries.size() != static_cast<std::size_t>(rows)) {
        throw ParseError("component entries need " + std::to_string(rows) +
                         " rows");
      }
      for (std::size_t r = 0; r < static_cast<std::size_t>(rows); ++r) {
        const Json& row = entries[r];
        if (!row.is_array() ||
            row.size() != static_cast<std::size_t>(cols)) {
          throw ParseError("component row " + std::to_string(r + 1) +
                           " needs " + std::to_string(cols) + " entries");
        }
        for (std::size_t c = 0; c < static_cast<std::size_t>(cols); ++c) {
          matrix(r, c) = bigint_from_json(row[c], "component entry");
        }
      }
    }
    m.components.emplace(degree, std::move(matrix));
  }
  return m;
}

Json to_json(const GradedSignature& sig) {
  Json out = Json::array();
  for (const Summand& s : sig.summands()) {
    Json pair = Json::array();
    pair.push_back(s.shift);
    if (s.exponent.is_infinite()) {
      pair.push_back("inf");
    } else {
      pair.push_back(s.exponent.value());
    }
    out.push_back(std::move(pair));
  }
  return Json{{"signature", std::move(out)}};
}

Json to_json(const Barcode& bc) {
  Json bars = Json::array();
  for (const Bar& b : bc.bars()) {
    Json bar;
    bar["birth"] = b.birth;
    if (b.persistence == kInfinity) {
      bar["persistence"] = "inf";
    } else {
      bar["persistence"] = b.persistence;
    }
    bars.push_back(std::move(bar));
  }
  return Json{{"bars", std::move(bars)}};
}

Json to_json(const SmithNormalForm& snf) {
  Json diagonal = Json::array();
  for (const Term& t : snf.diagonal) {
    diagonal.push_back(Json::array({t.coeff().str(), t.degree()}));
  }
  return Json{{"diagonal", std::move(diagonal)}, {"rank", snf.rank}};
}

Json to_json(const ReductionResult& r) {
  Json j;
  j["reduced"] = to_json(r.reduced);
  j["transform"] = to_json(r.transform);
  Json low_map = Json::array();
  for (const auto& [col, row] : r.low_map) {
    low_map.push_back(Json::array({col + 1, row + 1}));
  }
  j["low_map"] = std::move(low_map);
  j["axpy_count"] = r.axpy_count;
  j["passes"] = r.passes;
  return j;
}

Json zmod_report_json(const TriviallyGradedModule& m) {
  Json j;
  const PrimePowerSignature pp = prime_power_decomposition(m);
  Json prime_powers = Json::array();
  for (const PrimePowerSummand& s : pp.torsion) {
    prime_powers.push_back(Json::array(
        {s.degree, s.prime.convert_to<std::int64_t>(), s.exponent}));
  }
  j["prime_powers"] = std::move(prime_powers);
  Json free_ranks = Json::object();
  for (const auto& [degree, rank] : pp.free_ranks) {
    free_ranks[std::to_string(degree)] = rank;
  }
  j["free_ranks"] = std::move(free_ranks);

  const GradedEDResult ed = graded_elementary_divisor_decomposition(m);
  j["verdict"] = ed.exists ? "exists" : "nonexistent";
  if (ed.exists) {
    Json summands = Json::array();
    for (const auto& [degree, divisor] : ed.summands) {
      summands.push_back(Json::array({degree, divisor.str()}));
    }
    j["summands"] = std::move(summands);
  } else {
    Json witness = Json::array();
    for (const auto& [degree, divisor] : *ed.witness) {
      witness.push_back(Json::array({degree, divisor.str()}));
    }
    j["witness"] = std::move(witness);
  }

  const UngradedDivisors ungraded = ungraded_elementary_divisors(m);
  Json chain = Json::array();
  for (const BigInt& d : ungraded.chain) chain.push_back(d.str());
  j["ungraded_divisors"] = std::move(chain);
  j["ungraded_free_rank"] = ungraded.free_rank;
  return j;
}

Json selftest_report_json(std::uint64_t seed,
                          const std::vector<CheckResult>& checks) {
  Json list = Json::array();
  bool ok = true;
  for (const CheckResult& c : checks) {
    ok = ok && c.pass;
    list.push_back(
        Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return Json{{"seed", seed}, {"checks", std::move(list)}, {"ok", ok}};
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ktmod
