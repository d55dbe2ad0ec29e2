#include <CLI11.hpp>

#include <cctype>
#include <iostream>
#include <string>
#include <vector>

#include "qhsing/catalog.hpp"
#include "qhsing/parse.hpp"
#include "qhsing/report.hpp"
#include "qhsing/tables.hpp"
#include "qhsing/verify.hpp"
#include "qhsing/version.hpp"

namespace {

using namespace qhsing;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case errc::parse_error:
    case errc::unknown_variable:
    case errc::bad_exponent:
      return 2;
    case errc::not_quasihomogeneous:
      return 3;
    case errc::degenerate_weights:
    case errc::unused_variable:
      return 4;
    case errc::not_isolated:
      return 5;
    case errc::out_of_range:
    case errc::forbidden_modulus:
      return 2;
    default:
      return 1;
  }
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den == 0) throw Error(errc::parse_error, "zero denominator in " + s);
  return Rat(num, den);
}

TypeTag parse_type(const std::string& s) {
  static const std::vector<std::pair<std::string, Family>> fixed = {
      {"E6", Family::E6}, {"E7", Family::E7}, {"E8", Family::E8},
      {"P8", Family::P8}, {"X9", Family::X9}, {"J10", Family::J10},
  };
  for (const auto& [name, fam] : fixed) {
    if (s == name) return TypeTag{fam, std::nullopt};
  }
  if (s.size() >= 2 && (s[0] == 'A' || s[0] == 'D')) {
    int k = std::stoi(s.substr(1));
    return TypeTag{s[0] == 'A' ? Family::A : Family::D, k};
  }
  throw Error(errc::out_of_range, "unknown singularity type: " + s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants and residue-lift criteria for isolated "
               "quasihomogeneous hypersurface singularities"};
  app.set_version_flag("--version", std::string("qhsing ") + kVersion);
  app.require_subcommand(1);

  // analyze
  std::string poly_text, vars_csv = "z1,z2,z3", p_text = "2",
              format = "json";
  auto* analyze_cmd =
      app.add_subcommand("analyze", "full analysis report for one germ");
  analyze_cmd->add_option("polynomial", poly_text, "polynomial text")
      ->required();
  analyze_cmd->add_option("--vars", vars_csv,
                          "comma-separated variable order (default z1,z2,z3)");
  analyze_cmd->add_option("--p", p_text, "integrability exponent (rational)");
  analyze_cmd->add_option("--format", format, "json or markdown")
      ->check(CLI::IsMember({"json", "markdown"}));

  // tables
  std::string which = "simple";
  int table_n = 2;
  std::string k_range_text;
  auto* tables_cmd =
      app.add_subcommand("tables", "regenerate the classification tables");
  tables_cmd->add_option("which", which, "simple, parabolic or weights")
      ->check(CLI::IsMember({"simple", "parabolic", "weights"}));
  tables_cmd->add_option("--n", table_n, "complex dimension of the link");
  tables_cmd->add_option("--k-range", k_range_text,
                         "k range for the A/D families, e.g. 1:8");

  // catalog
  std::string type_text;
  int cat_n = 2;
  std::string modulus_text;
  auto* catalog_cmd =
      app.add_subcommand("catalog", "normal form of a catalog type");
  catalog_cmd->add_option("type", type_text, "A<k>, D<k>, E6..E8, P8, X9, J10")
      ->required();
  catalog_cmd->add_option("--n", cat_n, "complex dimension");
  catalog_cmd->add_option("--modulus", modulus_text,
                          "modulus a for P8/X9/J10 (rational)");

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "run the numerical verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*analyze_cmd) {
      std::vector<std::string> vars = split_csv(vars_csv);
      AnalysisReport r = analyze(poly_text, vars, parse_rat(p_text));
      std::cout << (format == "json" ? to_json(r) : to_markdown(r));
      return 0;
    }
    if (*tables_cmd) {
      std::optional<std::pair<int, int>> k_range;
      if (!k_range_text.empty()) {
        auto colon = k_range_text.find(':');
        if (colon == std::string::npos) {
          int k = std::stoi(k_range_text);
          k_range = {k, k};
        } else {
          k_range = {std::stoi(k_range_text.substr(0, colon)),
                     std::stoi(k_range_text.substr(colon + 1))};
        }
      }
      TableKind kind = which == "simple"      ? TableKind::Simple
                       : which == "parabolic" ? TableKind::Parabolic
                                              : TableKind::Weights;
      std::cout << emit_tables(kind, table_n, k_range);
      return 0;
    }
    if (*catalog_cmd) {
      TypeTag tag = parse_type(type_text);
      std::optional<Rat> modulus;
      if (!modulus_text.empty()) modulus = parse_rat(modulus_text);
      Poly p = catalog_normal_form(tag, cat_n, modulus);
      std::cout << to_string(p, default_vars(cat_n + 1)) << "\n";
      return 0;
    }
    if (*verify_cmd) {
      return run_verification(std::cout) ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
