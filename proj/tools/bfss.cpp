// Command-line front end: dataset validation, algebra operations on dataset
// files, the ranking pipeline, and the randomized law suite.
//
// Exit codes: 0 success, 1 I/O error, 2 validation or usage error,
// 3 law violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bfss/algebra.hpp"
#include "bfss/dataset.hpp"
#include "bfss/decision.hpp"
#include "bfss/laws.hpp"
#include "bfss/render.hpp"

namespace {

struct IoError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError{"cannot read '" + path + "'"};
  std::ostringstream out;
  out << in.rdbuf();
  if (in.bad()) throw IoError{"cannot read '" + path + "'"};
  return out.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError{"cannot write '" + path + "'"};
  out << text;
  out.flush();
  if (!out) throw IoError{"cannot write '" + path + "'"};
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

int cmd_validate(const std::string& path) {
  const auto data = bfss::parse_dataset(read_file(path));
  const auto objects = data.universe()->size();
  const auto params = data.size();
  std::cout << objects << (objects == 1 ? " object, " : " objects, ") << params
            << (params == 1 ? " parameter" : " parameters") << "\n";
  return 0;
}

int cmd_op(const std::string& name, const std::string& lhs_path, const std::string& rhs_path,
           const std::string& out_path) {
  const auto lhs = bfss::parse_dataset(read_file(lhs_path));

  bfss::BipolarFuzzySoftSet result = lhs;
  if (name == "complement") {
    result = bfss::soft_complement(lhs);
  } else {
    const auto rhs = bfss::parse_dataset(read_file(rhs_path));
    if (name == "restricted-intersection")
      result = bfss::soft_restricted_intersection(lhs, rhs);
    else if (name == "extended-union")
      result = bfss::soft_extended_union(lhs, rhs);
    else if (name == "extended-intersection")
      result = bfss::soft_extended_intersection(lhs, rhs);
    else if (name == "restricted-union")
      result = bfss::soft_restricted_union(lhs, rhs);
    else if (name == "and-product")
      result = bfss::soft_and(lhs, rhs);
    else
      result = bfss::soft_or(lhs, rhs);
  }
  write_output(out_path, bfss::serialize_dataset(result));
  return 0;
}

int cmd_decide(const std::string& data_path, const std::string& params_csv,
               const std::string& format, const std::string& out_path) {
  const auto data = bfss::parse_dataset(read_file(data_path));
  const auto report = bfss::decide(data, bfss::ParameterSet(split_csv(params_csv)));
  const auto fmt = format == "csv"    ? bfss::ReportFormat::csv
                   : format == "json" ? bfss::ReportFormat::json
                                      : bfss::ReportFormat::table;
  write_output(out_path, bfss::render_report(report, fmt));
  return 0;
}

int cmd_laws(long trials, std::uint64_t seed) {
  bfss::LawConfig cfg;
  cfg.trials = trials;
  cfg.seed = seed;
  const auto report = bfss::run_laws(cfg);
  std::cout << bfss::format_law_report(report);
  return report.total_failures() == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bipolar fuzzy soft sets: algebra, ranking and law checks"};
  app.require_subcommand(1);

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check a dataset file and print its shape");
  validate->add_option("path", validate_path, "dataset file")->required();

  std::string op_name;
  std::string lhs_path;
  std::string rhs_path;
  std::string op_out;
  auto* op = app.add_subcommand("op", "Apply an algebra operation to dataset files");
  op->add_option("--op", op_name, "operation name")
      ->required()
      ->check(CLI::IsMember({"complement", "restricted-intersection", "extended-union",
                             "extended-intersection", "restricted-union", "and-product",
                             "or-product"}));
  op->add_option("--lhs", lhs_path, "left dataset file")->required();
  op->add_option("--rhs", rhs_path, "right dataset file");
  op->add_option("--out", op_out, "output file (default: stdout)");

  std::string data_path;
  std::string params_csv;
  std::string format = "table";
  std::string decide_out;
  auto* decide = app.add_subcommand("decide", "Rank the universe over chosen parameters");
  decide->add_option("--data", data_path, "dataset file")->required();
  decide->add_option("--params", params_csv, "comma-separated parameter ids")->required();
  decide->add_option("--format", format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  decide->add_option("--out", decide_out, "output file (default: stdout)");

  long trials = 1000;
  std::uint64_t seed = 42;
  auto* laws = app.add_subcommand("laws", "Run the randomized algebra law suite");
  laws->add_option("--trials", trials, "number of random instances (default 1000)");
  laws->add_option("--seed", seed, "generator seed (default 42)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(validate_path);
    if (*op) {
      if (op_name == "complement" && op->count("--rhs") > 0) {
        std::cerr << "error: complement is unary, drop --rhs\n";
        return 2;
      }
      if (op_name != "complement" && op->count("--rhs") == 0) {
        std::cerr << "error: " << op_name << " needs --rhs\n";
        return 2;
      }
      return cmd_op(op_name, lhs_path, rhs_path, op_out);
    }
    if (*decide) return cmd_decide(data_path, params_csv, format, decide_out);
    if (*laws) return cmd_laws(trials, seed);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.message << "\n";
    return 1;
  } catch (const bfss::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
