// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#include "ktmod/oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ktmod/linalg.hpp"

namespace ktmod {

std::int64_t module_hilbert_dim(const GradedMatrix& a, std::int64_t d) {
  if (d < 0) return 0;
  std::vector<std::size_t> rows, cols;
  for (std::size_t j = 0; j < a.rows(); ++j) {
    if (a.row_degrees()[j] <= d) rows.push_back(j);
  }
  for (std::size_t k = 0; k < a.cols(); ++k) {
    if (a.col_degrees()[k] <= d) cols.push_back(k);
  }
  // Degree-d slice: basis T^(d - m_k) e_k maps to sum_j coeff(A[j][k])
  // T^(d - n_j) f_j, so the slice matrix is just the coefficient pattern of
  // the included columns (their nonzero rows are included automatically).
  KMatrix slice = kmatrix_zero(a.field(), rows.size(), cols.size());
  for (std::size_t cj = 0; cj < cols.size(); ++cj) {
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
      const Term& t = a.at(rows[ri], cols[cj]);
      if (!t.is_zero()) slice(ri, cj) = t.coeff();
    }
  }
  return static_cast<std::int64_t>(rows.size()) -
         static_cast<std::int64_t>(column_space_rank(a.field(), slice));
}

std::int64_t Rng::below(std::int64_t n) {
  internal_check(n > 0, "Rng::below needs n > 0");
  return static_cast<std::int64_t>(engine_() % static_cast<std::uint64_t>(n));
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  internal_check(lo <= hi, "Rng::range needs lo <= hi");
  return lo + below(hi - lo + 1);
}

FieldElement random_element(FieldSpec f, Rng& rng) {
  if (f.is_prime_field()) {
    return FieldElement::from_int(f, rng.below(f.modulus()));
  }
  return FieldElement::from_rational(
      BigRational(rng.range(-9, 9), rng.range(1, 9)));
}

FieldElement random_nonzero_element(FieldSpec f, Rng& rng) {
  if (f.is_prime_field()) {
    return FieldElement::from_int(f, rng.range(1, f.modulus() - 1));
  }
  std::int64_t num = rng.range(1, 9);
  if (rng.coin()) num = -num;
  return FieldElement::from_rational(BigRational(num, rng.range(1, 9)));
}

GradedMatrix random_graded_matrix(FieldSpec f, Rng& rng, std::size_t max_dim,
                                  std::int64_t max_deg) {
  const std::size_t r = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(max_dim)));
  const std::size_t s = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(max_dim)));
  DegreeVec row_degs(r), col_degs(s);
  for (auto& d : row_degs) d = rng.range(0, max_deg);
  for (auto& d : col_degs) d = rng.range(0, max_deg);
  std::sort(row_degs.begin(), row_degs.end());
  std::sort(col_degs.begin(), col_degs.end());
  Matrix<Term> entries(r, s, Term::zero(f));
  for (std::size_t k = 0; k < s; ++k) {
    for (std::size_t j = 0; j < r; ++j) {
      const std::int64_t deg = col_degs[k] - row_degs[j];
      if (deg < 0) continue;
      if (!rng.coin()) continue;  // density 1/2 over admissible slots
      entries(j, k) = Term::monomial(random_nonzero_element(f, rng), deg);
    }
  }
  return GradedMatrix(f, std::move(row_degs), std::move(col_degs),
                      std::move(entries));
}

PersistenceModule random_persistence_module(FieldSpec f, Rng& rng,
                                            std::size_t max_levels,
                                            std::size_t max_dim) {
  PersistenceModule m;
  m.field = f;
  const std::size_t levels =
      static_cast<std::size_t>(rng.range(1, static_cast<std::int64_t>(max_levels)));
  for (std::size_t n = 0; n < levels; ++n) {
    m.dims.push_back(static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(max_dim))));
  }
  for (std::size_t n = 0; n + 1 < levels; ++n) {
    KMatrix map = kmatrix_zero(f, m.dims[n + 1], m.dims[n]);
    for (std::size_t i = 0; i < map.rows(); ++i) {
      for (std::size_t j = 0; j < map.cols(); ++j) {
        if (rng.coin()) map(i, j) = random_element(f, rng);
      }
    }
    m.maps.push_back(std::move(map));
  }
  return m;
}

ReductionBatchReport reduction_batch(FieldSpec f, std::size_t instances,
                                     std::uint64_t seed, std::size_t max_dim,
                                     std::int64_t max_deg,
                                     std::int64_t max_checked_degree) {
  Rng rng(seed);
  ReductionBatchReport report;
  for (std::size_t n = 0; n < instances; ++n) {
    const GradedMatrix a = random_graded_matrix(f, rng, max_dim, max_deg);
    const ReductionResult res = reduce(a);
    const GradedSignature sig = quotient_signature(res.reduced);

    bool hilbert_ok = true;
    for (std::int64_t d = 0; d <= max_checked_degree && hilbert_ok; ++d) {
      hilbert_ok = signature_hilbert_dim(sig, d) == module_hilbert_dim(a, d);
    }
    if (!hilbert_ok) {
      ++report.hilbert_mismatches;
      if (report.first_issue.empty()) {
        report.first_issue = "hilbert mismatch, " + f.name() + " instance " +
                             std::to_string(n) + ", signature " + sig.str();
      }
    }

    if (multiply(a, res.transform) != res.reduced ||
        !is_reduced(res.reduced)) {
      ++report.transform_failures;
      if (report.first_issue.empty()) {
        report.first_issue = "transform contract failed, " + f.name() +
                             " instance " + std::to_string(n);
      }
    }

    if (res.axpy_count > a.rows() * a.cols() || res.passes != 1) {
      ++report.termination_violations;
      if (report.first_issue.empty()) {
        report.first_issue =
            "termination contract failed, " + f.name() + " instance " +
            std::to_string(n) + " (" + std::to_string(res.axpy_count) +
            " axpys, " + std::to_string(res.passes) + " passes)";
      }
    }
    ++report.instances;
  }
  return report;
}

MinorsBatchReport minors_agreement_batch(FieldSpec f, std::size_t instances,
                                         std::uint64_t seed,
                                         std::size_t max_dim) {
  Rng rng(seed);
  MinorsBatchReport report;
  for (std::size_t n = 0; n < instances; ++n) {
    const GradedMatrix a = random_graded_matrix(f, rng, max_dim, 10);
    const SmithNormalForm from_lows =
        to_smith_normal_form(reduce(a).reduced);
    const SmithNormalForm from_minors = elementary_divisors_by_minors(a);
    const bool match = from_lows.rank == from_minors.rank &&
                       from_lows.diagonal == from_minors.diagonal;
    if (!match) {
      ++report.mismatches;
      if (report.first_issue.empty()) {
        report.first_issue =
            "divisor mismatch, " + f.name() + " instance " + std::to_string(n);
      }
    }
    ++report.instances;
  }
  return report;
}

namespace {

// All multisets of block values obtainable by partitioning one degree's
// prime powers into blocks with pairwise distinct primes.
void degree_partitions(const std::vector<std::pair<BigInt, std::int64_t>>& pp,
                       std::size_t i, std::vector<std::vector<std::size_t>>& blocks,
                       std::set<std::vector<BigInt>>& out) {
  if (i == pp.size()) {
    std::vector<BigInt> values;
    for (const auto& block : blocks) {
      BigInt v = 1;
      for (std::size_t idx : block) {
        v *= boost::multiprecision::pow(
            pp[idx].first, static_cast<unsigned>(pp[idx].second));
      }
      values.push_back(v);
    }
    std::sort(values.begin(), values.end());
    out.insert(std::move(values));
    return;
  }
  blocks.push_back({i});
  degree_partitions(pp, i + 1, blocks, out);
  blocks.pop_back();
  for (auto& block : blocks) {
    bool prime_clash = false;
    for (std::size_t idx : block) {
      if (pp[idx].first == pp[i].first) {
        prime_clash = true;
        break;
      }
    }
    if (prime_clash) continue;
    block.push_back(i);
    degree_partitions(pp, i + 1, blocks, out);
    block.pop_back();
  }
}

bool is_divisor_chain(const std::vector<BigInt>& sorted_values) {
  for (std::size_t i = 0; i + 1 < sorted_values.size(); ++i) {
    if (sorted_values[i + 1] % sorted_values[i] != 0) return false;
  }
  return true;
}

bool any_combination_chains(
    const std::vector<std::set<std::vector<BigInt>>>& per_degree,
    std::size_t i, std::vector<BigInt>& acc) {
  if (i == per_degree.size()) {
    std::vector<BigInt> values = acc;
    std::sort(values.begin(), values.end());
    return is_divisor_chain(values);
  }
  for (const auto& option : per_degree[i]) {
    const std::size_t before = acc.size();
    acc.insert(acc.end(), option.begin(), option.end());
    if (any_combination_chains(per_degree, i + 1, acc)) return true;
    acc.resize(before);
  }
  return false;
}

}  // namespace

bool graded_ed_exists_bruteforce(const TriviallyGradedModule& m) {
  const PrimePowerSignature sig = prime_power_decomposition(m);
  std::map<std::int64_t, std::vector<std::pair<BigInt, std::int64_t>>> by_degree;
  for (const PrimePowerSummand& s : sig.torsion) {
    by_degree[s.degree].emplace_back(s.prime, s.exponent);
  }
  std::vector<std::set<std::vector<BigInt>>> per_degree;
  for (const auto& [degree, pp] : by_degree) {
    std::set<std::vector<BigInt>> options;
    std::vector<std::vector<std::size_t>> blocks;
    degree_partitions(pp, 0, blocks, options);
    per_degree.push_back(std::move(options));
  }
  std::vector<BigInt> acc;
  return any_combination_chains(per_degree, 0, acc);
}

ZmodEnumReport zmod_bruteforce_exhaustive(std::size_t max_summands,
                                          std::int64_t max_exponent,
                                          std::int64_t max_degree) {
  const std::int64_t primes[] = {2, 3, 5};
  struct Option {
    std::int64_t degree;
    std::int64_t prime;
    std::int64_t exponent;
  };
  std::vector<Option> options;
  for (std::int64_t deg = 0; deg <= max_degree; ++deg) {
    for (std::int64_t p : primes) {
      for (std::int64_t k = 1; k <= max_exponent; ++k) {
        options.push_back(Option{deg, p, k});
      }
    }
  }
  ZmodEnumReport report;
  std::vector<std::size_t> chosen;
  auto build_and_check = [&]() {
    std::map<std::int64_t, std::vector<BigInt>> torsion_by_degree;
    for (std::size_t idx : chosen) {
      const Option& o = options[idx];
      torsion_by_degree[o.degree].push_back(boost::multiprecision::pow(
          BigInt(o.prime), static_cast<unsigned>(o.exponent)));
    }
    TriviallyGradedModule m;
    for (const auto& [degree, divisors] : torsion_by_degree) {
      IntegerMatrix pres(divisors.size(), divisors.size(), BigInt(0));
      for (std::size_t i = 0; i < divisors.size(); ++i) {
        pres(i, i) = divisors[i];
      }
      m.components.emplace(degree, std::move(pres));
    }
    const GradedEDResult fast = graded_elementary_divisor_decomposition(m);
    const bool slow = graded_ed_exists_bruteforce(m);
    bool ok = fast.exists == slow;
    if (ok && !fast.exists) {
      // The witness must be cross-degree and incomparable.
      const auto& w = *fast.witness;
      ok = w[0].first != w[1].first && w[0].second % w[1].second != 0 &&
           w[1].second % w[0].second != 0;
    }
    if (!ok) {
      ++report.mismatches;
      if (report.first_issue.empty()) {
        std::string desc;
        for (std::size_t idx : chosen) {
          const Option& o = options[idx];
          desc += " Z/" + std::to_string(o.prime) + "^" +
                  std::to_string(o.exponent) + "@" + std::to_string(o.degree);
        }
        report.first_issue = "existence disagreement on" + desc;
      }
    }
    ++report.instances;
  };
  // Multisets over the options, smallest index first.
  std::function<void(std::size_t)> enumerate = [&](std::size_t start) {
    build_and_check();
    if (chosen.size() == max_summands) return;
    for (std::size_t i = start; i < options.size(); ++i) {
      chosen.push_back(i);
      enumerate(i);
      chosen.pop_back();
    }
  };
  enumerate(0);
  return report;
}

std::vector<std::pair<std::string, FilteredComplex>> sample_filtrations() {
  using V = std::vector<std::int64_t>;
  auto make = [](std::vector<std::pair<V, std::int64_t>> data) {
    std::vector<Simplex> simplices;
    for (auto& [vertices, time] : data) {
      simplices.push_back(Simplex{std::move(vertices), time});
    }
    return FilteredComplex::from_simplices(std::move(simplices));
  };
  std::vector<std::pair<std::string, FilteredComplex>> corpus;
  corpus.emplace_back("triangle",
                      make({{V{0}, 0}, {V{1}, 0}, {V{2}, 0},
                            {V{0, 1}, 1}, {V{0, 2}, 1}, {V{1, 2}, 1},
                            {V{0, 1, 2}, 2}}));
  corpus.emplace_back("point", make({{V{0}, 0}}));
  corpus.emplace_back("empty", make({}));
  corpus.emplace_back("two-components-merge",
                      make({{V{0}, 0}, {V{1}, 0}, {V{2}, 1},
                            {V{0, 2}, 1}, {V{1, 2}, 3}}));
  corpus.emplace_back("circle",
                      make({{V{0}, 0}, {V{1}, 0}, {V{2}, 0}, {V{3}, 0},
                            {V{0, 1}, 1}, {V{1, 2}, 1}, {V{2, 3}, 1},
                            {V{0, 3}, 1}}));
  corpus.emplace_back("two-triangles-shared-edge",
                      make({{V{0}, 0}, {V{1}, 0}, {V{2}, 0}, {V{3}, 0},
                            {V{0, 1}, 1}, {V{1, 2}, 1}, {V{0, 2}, 1},
                            {V{1, 3}, 1}, {V{2, 3}, 1},
                            {V{0, 1, 2}, 2}, {V{1, 2, 3}, 4}}));
  corpus.emplace_back("growing-path",
                      make({{V{0}, 0}, {V{1}, 1}, {V{2}, 2}, {V{3}, 3},
                            {V{0, 1}, 2}, {V{1, 2}, 3}, {V{2, 3}, 4}}));
  corpus.emplace_back("star",
                      make({{V{0}, 0}, {V{1}, 1}, {V{2}, 1}, {V{3}, 1},
                            {V{4}, 1}, {V{0, 1}, 2}, {V{0, 2}, 2},
                            {V{0, 3}, 2}, {V{0, 4}, 2}}));
  corpus.emplace_back(
      "hollow-tetra-filled",
      make({{V{0}, 0}, {V{1}, 0}, {V{2}, 0}, {V{3}, 0},
            {V{0, 1}, 1}, {V{0, 2}, 1}, {V{0, 3}, 1},
            {V{1, 2}, 1}, {V{1, 3}, 1}, {V{2, 3}, 1},
            {V{0, 1, 2}, 2}, {V{0, 1, 3}, 2}, {V{0, 2, 3}, 2},
            {V{1, 2, 3}, 2}, {V{0, 1, 2, 3}, 3}}));
  corpus.emplace_back(
      "triangle-plus-segment-bridge",
      make({{V{0}, 0}, {V{1}, 0}, {V{2}, 0}, {V{3}, 0}, {V{4}, 0},
            {V{3, 4}, 0}, {V{0, 1}, 1}, {V{1, 2}, 1}, {V{0, 2}, 1},
            {V{2, 3}, 2}, {V{0, 1, 2}, 3}}));
  corpus.emplace_back(
      "cone-over-square",
      make({{V{0}, 0}, {V{1}, 0}, {V{2}, 0}, {V{3}, 0},
            {V{0, 1}, 1}, {V{1, 2}, 1}, {V{2, 3}, 1}, {V{0, 3}, 1},
            {V{4}, 2}, {V{0, 4}, 3}, {V{1, 4}, 3}, {V{2, 4}, 3},
            {V{3, 4}, 3}, {V{0, 1, 4}, 4}, {V{1, 2, 4}, 4},
            {V{2, 3, 4}, 4}, {V{0, 3, 4}, 4}}));
  corpus.emplace_back(
      "wedge-two-cycles",
      make({{V{0}, 0}, {V{1}, 0}, {V{2}, 0}, {V{3}, 0}, {V{4}, 0},
            {V{0, 1}, 1}, {V{1, 2}, 1}, {V{0, 2}, 1},
            {V{0, 3}, 2}, {V{3, 4}, 2}, {V{0, 4}, 2},
            {V{0, 1, 2}, 3}}));
  return corpus;
}

PersistenceReport persistence_consistency_check(FieldSpec f) {
  PersistenceReport report;
  for (const auto& [name, complex] : sample_filtrations()) {
    ++report.complexes;
    for (int q = 0; q <= complex.max_dimension() + 1; ++q) {
      const Barcode bc = persistent_homology(complex, q, f);
      for (std::int64_t level = 0; level <= complex.max_time(); ++level) {
        const std::int64_t alive = bars_alive_at(bc, level);
        const std::int64_t betti = betti_number(complex, q, level, f);
        ++report.comparisons;
        if (alive != betti) {
          ++report.mismatches;
          if (report.first_issue.empty()) {
            report.first_issue = name + " q=" + std::to_string(q) +
                                 " level=" + std::to_string(level) +
                                 ": bars alive " + std::to_string(alive) +
                                 " vs betti " + std::to_string(betti);
          }
        }
      }
    }
  }
  return report;
}

namespace {

bool check_field_axioms(FieldSpec f, const std::vector<FieldElement>& elems,
                        std::string& issue) {
  const FieldElement zero = FieldElement::zero(f);
  const FieldElement one = FieldElement::one(f);
  for (const auto& a : elems) {
    if (a + zero != a || a * one != a || a + (-a) != zero) {
      issue = "unit/negation axiom failed at " + a.str() + " over " + f.name();
      return false;
    }
    if (!a.is_zero() && a * inv(a) != one) {
      issue = "inverse axiom failed at " + a.str() + " over " + f.name();
      return false;
    }
    for (const auto& b : elems) {
      if (a + b != b + a || a * b != b * a) {
        issue = "commutativity failed over " + f.name();
        return false;
      }
      for (const auto& c : elems) {
        if ((a + b) + c != a + (b + c) || (a * b) * c != a * (b * c) ||
            a * (b + c) != a * b + a * c) {
          issue = "associativity/distributivity failed over " + f.name();
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<FieldElement> all_residues(FieldSpec f) {
  std::vector<FieldElement> out;
  for (std::int64_t v = 0; v < f.modulus(); ++v) {
    out.push_back(FieldElement::from_int(f, v));
  }
  return out;
}

std::vector<FieldElement> rational_grid() {
  std::vector<FieldElement> out;
  const std::pair<std::int64_t, std::int64_t> values[] = {
      {0, 1}, {1, 1}, {-1, 1}, {2, 1}, {-2, 1}, {1, 2},
      {-1, 2}, {2, 3}, {-2, 3}, {5, 1}, {7, 4}, {-7, 4}};
  for (auto [n, d] : values) {
    out.push_back(FieldElement::from_rational(BigRational(n, d)));
  }
  return out;
}

}  // namespace

std::vector<CheckResult> run_selftest(std::uint64_t seed) {
  std::vector<CheckResult> checks;
  const std::vector<FieldSpec> fields = {FieldSpec::gf(2), FieldSpec::gf(3),
                                         FieldSpec::gf(5),
                                         FieldSpec::rationals()};

  {
    CheckResult check{"field-axioms", true, ""};
    std::string issue;
    for (std::int64_t p : {2, 3, 5, 7}) {
      if (!check_field_axioms(FieldSpec::gf(p), all_residues(FieldSpec::gf(p)),
                              issue)) {
        check.pass = false;
        check.detail = issue;
        break;
      }
    }
    if (check.pass &&
        !check_field_axioms(FieldSpec::rationals(), rational_grid(), issue)) {
      check.pass = false;
      check.detail = issue;
    }
    if (check.pass) check.detail = "GF(2,3,5,7) exhaustive + rational grid";
    checks.push_back(std::move(check));
  }

  std::vector<ReductionBatchReport> batches;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    batches.push_back(reduction_batch(fields[i], 30, seed + i));
  }
  {
    CheckResult check{"reduction-hilbert-oracle", true, ""};
    std::size_t total = 0;
    for (const auto& b : batches) {
      total += b.instances;
      if (b.hilbert_mismatches > 0) {
        check.pass = false;
        check.detail = b.first_issue;
      }
    }
    if (check.pass) {
      check.detail = std::to_string(total) + " instances, degrees 0..21";
    }
    checks.push_back(std::move(check));
  }
  {
    CheckResult check{"reduction-transform-contract", true, ""};
    for (const auto& b : batches) {
      if (b.transform_failures > 0) {
        check.pass = false;
        check.detail = b.first_issue;
      }
    }
    if (check.pass) check.detail = "A*B == A' and A' reduced on every instance";
    checks.push_back(std::move(check));
  }
  {
    CheckResult check{"reduction-termination", true, ""};
    for (const auto& b : batches) {
      if (b.termination_violations > 0) {
        check.pass = false;
        check.detail = b.first_issue;
      }
    }
    if (check.pass) check.detail = "axpys <= r*s, one sweep, on every instance";
    checks.push_back(std::move(check));
  }
  {
    CheckResult check{"smith-vs-minors", true, ""};
    std::size_t total = 0;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      const MinorsBatchReport report =
          minors_agreement_batch(fields[i], 15, seed + 100 + i);
      total += report.instances;
      if (report.mismatches > 0) {
        check.pass = false;
        check.detail = report.first_issue;
      }
    }
    if (check.pass) check.detail = std::to_string(total) + " small instances";
    checks.push_back(std::move(check));
  }
  {
    CheckResult check{"signature-uniqueness", true, ""};
    Rng rng(seed + 200);
    for (std::size_t i = 0; i < 8; ++i) {
      const FieldSpec f = fields[i % fields.size()];
      const GradedMatrix a = random_graded_matrix(f, rng);
      if (!verify_signature_uniqueness(a, 15, seed + 300 + i)) {
        check.pass = false;
        check.detail = "signature changed under a graded basis change, " +
                       f.name() + " instance " + std::to_string(i);
        break;
      }
    }
    if (check.pass) check.detail = "8 instances x 15 basis changes";
    checks.push_back(std::move(check));
  }
  {
    CheckResult check{"zmod-chain-vs-bruteforce", true, ""};
    const ZmodEnumReport report = zmod_bruteforce_exhaustive();
    check.pass = report.mismatches == 0;
    check.detail = check.pass ? std::to_string(report.instances) +
                                    " modules enumerated"
                              : report.first_issue;
    checks.push_back(std::move(check));
  }
  {
    CheckResult check{"persistence-bars-vs-betti", true, ""};
    std::size_t comparisons = 0;
    for (FieldSpec f :
         {FieldSpec::gf(2), FieldSpec::gf(5), FieldSpec::rationals()}) {
      const PersistenceReport report = persistence_consistency_check(f);
      comparisons += report.comparisons;
      if (report.mismatches > 0) {
        check.pass = false;
        check.detail = report.first_issue + " over " + f.name();
      }
    }
    if (check.pass) {
      check.detail = std::to_string(comparisons) + " level comparisons";
    }
    checks.push_back(std::move(check));
  }
  {
    CheckResult check{"presentation-dims-roundtrip", true, ""};
    Rng rng(seed + 400);
    for (std::size_t i = 0; i < 40 && check.pass; ++i) {
      const FieldSpec f = fields[i % fields.size()];
      const PersistenceModule m = random_persistence_module(f, rng);
      const GradedSignature sig = persistence_signature(m);
      const std::int64_t top = static_cast<std::int64_t>(m.dims.size()) - 1;
      for (std::int64_t d = 0; d <= top + 3; ++d) {
        const std::int64_t expect = static_cast<std::int64_t>(
            m.dims[static_cast<std::size_t>(std::min(d, top))]);
        if (signature_hilbert_dim(sig, d) != expect) {
          check.pass = false;
          check.detail = "level dim mismatch at d=" + std::to_string(d) +
                         " over " + f.name();
          break;
        }
      }
    }
    if (check.pass) check.detail = "40 random modules, stabilized tails";
    checks.push_back(std::move(check));
  }
  return checks;
}

}  // namespace ktmod
