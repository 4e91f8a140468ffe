// Copyright 2026 the ktmod authors
// SPDX-License-Identifier: Apache-2.0
#include "ktmod/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>

#include "ktmod/json_io.hpp"
#include "ktmod/reduction.hpp"
#include "ktmod/render.hpp"

namespace ktmod {
namespace {

constexpr std::uint64_t kDefaultSeed = 20260816;

FieldSpec field_from_flag(const std::string& flag) {
  if (flag == "gf2") return FieldSpec::gf(2);
  if (flag == "gf3") return FieldSpec::gf(3);
  if (flag == "gf5") return FieldSpec::gf(5);
  if (flag == "q") return FieldSpec::rationals();
  throw UsageError("unknown field flag: " + flag);
}

void write_svg(const std::string& path, const Barcode& bc) {
  std::ofstream file(path);
  if (!file) throw UsageError("cannot open SVG output file: " + path);
  file << svg_barcode(bc);
  if (!file) throw UsageError("failed writing SVG output file: " + path);
}

int cmd_decompose(const std::string& input, std::ostream& out) {
  const GradedMatrix a = graded_matrix_from_json(load_json(input));
  out << dump_json(to_json(quotient_signature(reduce(a).reduced)));
  return 0;
}

int cmd_snf(const std::string& input, std::ostream& out) {
  const GradedMatrix a = graded_matrix_from_json(load_json(input));
  const ReductionResult r = reduce(a);
  const SmithNormalForm snf = to_smith_normal_form(r.reduced);
  Json j = to_json(r);
  j.update(to_json(snf));
  out << dump_json(j);
  return 0;
}

int cmd_barcode(const std::string& input, const std::string& field_flag,
                std::int64_t degree, bool degree_given, bool ascii,
                const std::string& svg_path, std::ostream& out) {
  const Json j = load_json(input);
  Barcode bc;
  if (j.is_object() && j.contains("simplices")) {
    const FilteredComplex complex = filtration_from_json(j);
    FieldSpec field = FieldSpec::gf(2);
    if (auto from_file = filtration_field_from_json(j)) field = *from_file;
    if (!field_flag.empty()) field = field_from_flag(field_flag);
    bc = persistent_homology(complex, static_cast<int>(degree), field);
  } else if (j.is_object() && j.contains("dims")) {
    if (!field_flag.empty()) {
      throw UsageError(
          "--field applies to filtration inputs only; this persistence "
          "module already carries its field");
    }
    if (degree_given) {
      throw UsageError(
          "--degree applies to filtration inputs only; a persistence "
          "module has no homology degree to select");
    }
    const PersistenceModule m = persistence_module_from_json(j);
    bc = barcode_from_signature(persistence_signature(m));
  } else {
    throw ParseError(
        "barcode input must contain \"simplices\" (filtration) or "
        "\"dims\" (persistence module)");
  }
  out << dump_json(to_json(bc));
  if (ascii) out << ascii_barcode(bc);
  if (!svg_path.empty()) write_svg(svg_path, bc);
  return 0;
}

int cmd_zmod(const std::string& input, std::ostream& out) {
  const TriviallyGradedModule m = zmodule_from_json(load_json(input));
  out << dump_json(zmod_report_json(m));
  return 0;
}

int cmd_selftest(std::uint64_t seed, std::ostream& out) {
  const std::vector<CheckResult> checks = run_selftest(seed);
  const Json report = selftest_report_json(seed, checks);
  out << dump_json(report);
  return report.at("ok").get<bool>() ? 0 : 2;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Exact decomposition of graded modules over K[T], with persistence "
      "barcodes and integer-graded counterexample checks"};
  app.set_help_all_flag("--help-all", "Print help for all subcommands");
  app.require_subcommand(1);

  std::string decompose_input;
  CLI::App* decompose = app.add_subcommand(
      "decompose", "Reduce a graded presentation and print its signature");
  decompose->add_option("input", decompose_input, "Presentation matrix JSON")
      ->required();

  std::string snf_input;
  CLI::App* snf = app.add_subcommand(
      "snf",
      "Reduce a graded matrix and print the reduction, transform, and "
      "Smith normal form");
  snf->add_option("input", snf_input, "Graded matrix JSON")->required();

  std::string barcode_input;
  std::string barcode_field;
  std::int64_t barcode_degree = 0;
  bool barcode_ascii = false;
  std::string barcode_svg;
  CLI::App* barcode = app.add_subcommand(
      "barcode",
      "Compute the barcode of a persistence module or a filtered complex");
  barcode
      ->add_option("input", barcode_input,
                   "Persistence module or filtration JSON")
      ->required();
  barcode
      ->add_option("--field", barcode_field,
                   "Coefficient field for filtration inputs")
      ->check(CLI::IsMember({"gf2", "gf3", "gf5", "q"}));
  barcode
      ->add_option("--degree", barcode_degree,
                   "Homology degree for filtration inputs")
      ->check(CLI::NonNegativeNumber);
  barcode->add_flag("--ascii", barcode_ascii,
                    "Also print an ASCII bar rendering");
  barcode->add_option("--svg", barcode_svg, "Write an SVG rendering here");

  std::string zmod_input;
  CLI::App* zmod = app.add_subcommand(
      "zmod",
      "Decompose a trivially graded Z-module and report whether a graded "
      "elementary divisor decomposition exists");
  zmod->add_option("input", zmod_input, "Graded Z-module JSON")->required();

  std::uint64_t seed = kDefaultSeed;
  CLI::App* selftest =
      app.add_subcommand("selftest", "Run the built-in oracle suites");
  selftest->add_option("--seed", seed, "Seed for the randomized suites");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (app.got_subcommand(decompose)) return cmd_decompose(decompose_input, out);
    if (app.got_subcommand(snf)) return cmd_snf(snf_input, out);
    if (app.got_subcommand(barcode)) {
      return cmd_barcode(barcode_input, barcode_field, barcode_degree,
                         barcode->count("--degree") > 0, barcode_ascii,
                         barcode_svg, out);
    }
    if (app.got_subcommand(zmod)) return cmd_zmod(zmod_input, out);
    if (app.got_subcommand(selftest)) return cmd_selftest(seed, out);
    err << "error: no subcommand selected\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ktmod
