// hosoya: triangles, matrices, graph families, spectra and the verification
// suite from the command line.
//
// Exit codes: 0 ok, 1 verification failures, 2 usage, 3 I/O.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hosoya/cli.hpp"

namespace {

using hosoya::cli::ExitCode;
using hosoya::cli::OutputFormat;

int code(ExitCode c) { return static_cast<int>(c); }

const std::vector<std::string> kFormats = {"plain", "csv", "json", "dot"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Determinant Hosoya triangle graphs: exact spectra and claim verification"};
  app.set_version_flag("--version", HOSOYA_VERSION);
  app.require_subcommand(1);

  std::string format = "plain";

  auto* triangle = app.add_subcommand("triangle", "print rows of a triangle");
  std::string triangle_kind = "det";
  std::int64_t rows = 7;
  bool triangle_mod2 = false;
  triangle->add_option("--kind", triangle_kind, "det or hosoya")->check(CLI::IsMember({"det", "hosoya"}));
  triangle->add_option("--rows", rows, "number of rows")->check(CLI::PositiveNumber);
  triangle->add_flag("--mod2", triangle_mod2, "reduce entries mod 2");
  triangle->add_option("--format", format)->check(CLI::IsMember(kFormats));

  auto* matrix = app.add_subcommand("matrix", "print S_w or T_w");
  std::string matrix_kind = "S";
  std::int64_t w = 7;
  bool matrix_mod2 = false;
  matrix->add_option("--kind", matrix_kind, "S or T")->check(CLI::IsMember({"S", "T"}));
  matrix->add_option("-w,--width", w, "matrix size")->check(CLI::PositiveNumber);
  matrix->add_flag("--mod2", matrix_mod2, "reduce entries mod 2");
  matrix->add_option("--format", format)->check(CLI::IsMember(kFormats));

  auto* graph = app.add_subcommand("graph", "print a family graph");
  std::string family;
  graph->add_option("family", family, "kind:w or join:n,m,r")->required();
  graph->add_option("--format", format)->check(CLI::IsMember(kFormats));

  auto* spectrum = app.add_subcommand("spectrum", "characteristic polynomial and integer roots of a family graph");
  bool laplacian = false;
  spectrum->add_option("family", family, "kind:w or join:n,m,r")->required();
  spectrum->add_flag("--laplacian", laplacian, "use the Laplacian instead of the adjacency matrix");
  spectrum->add_option("--format", format)->check(CLI::IsMember(kFormats));

  auto* condition = app.add_subcommand("condition", "integrality witness for (K_n ⊔ K_n) ∇ K̄_r");
  std::int64_t n = 1;
  std::int64_t r = 1;
  condition->add_option("n", n)->required();
  condition->add_option("r", r)->required();
  condition->add_option("--format", format)->check(CLI::IsMember(kFormats));

  auto* verify = app.add_subcommand("verify", "run the claim checks and write a report");
  std::int64_t t_max = hosoya::kDefaultTMax;
  std::vector<std::string> checks;
  std::string out_path;
  std::string report_format = "json";
  unsigned threads = 0;
  verify->add_option("--t-max", t_max, "largest t (w up to 3t+2)")->check(CLI::Range(std::int64_t{1}, hosoya::kMaxTMax));
  verify->add_option("--check", checks, "restrict to these checks (repeatable)");
  verify->add_option("--out", out_path, "write the report here instead of stdout");
  verify->add_option("--format", report_format)->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--threads", threads, "worker threads, 0 = all cores");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : code(ExitCode::Usage);
  }

  try {
    const OutputFormat fmt = hosoya::cli::parse_format(format);
    if (*triangle) {
      const auto kind = triangle_kind == "det" ? hosoya::TriangleKind::DetHosoya : hosoya::TriangleKind::Hosoya;
      std::cout << hosoya::cli::cmd_triangle(kind, rows, triangle_mod2, fmt);
    } else if (*matrix) {
      std::cout << hosoya::cli::cmd_matrix(matrix_kind[0], w, matrix_mod2, fmt);
    } else if (*graph) {
      std::cout << hosoya::cli::cmd_graph(family, fmt);
    } else if (*spectrum) {
      std::cout << hosoya::cli::cmd_spectrum(family, laplacian, fmt);
    } else if (*condition) {
      std::cout << hosoya::cli::cmd_condition(n, r, fmt);
    } else if (*verify) {
      const auto report = hosoya::run_suite(t_max, checks, threads);
      const std::string text = hosoya::cli::render_report(report, hosoya::cli::parse_format(report_format));
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        out << text;
        out.close();
        if (!out) {
          std::cerr << "error: cannot write " << out_path << "\n";
          return code(ExitCode::Io);
        }
      }
      std::cerr << hosoya::cli::verify_summary_line(report) << "\n";
      return report.summary.fail == 0 ? code(ExitCode::Ok) : code(ExitCode::Failures);
    }
  } catch (const hosoya::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return code(ExitCode::Usage);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return code(ExitCode::Failures);
  }
  return code(ExitCode::Ok);
}
