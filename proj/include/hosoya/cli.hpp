#pragma once

/**
 * @file cli.hpp
 * @brief Rendering behind the `hosoya` command-line tool.
 *
 * Each cmd_* function returns the exact text the tool prints, so output can
 * be tested without spawning a process. All numbers are exact decimals.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hosoya/closed_forms.hpp"
#include "hosoya/error.hpp"
#include "hosoya/families.hpp"
#include "hosoya/graph.hpp"
#include "hosoya/matrix.hpp"
#include "hosoya/polynomial.hpp"
#include "hosoya/spectra.hpp"
#include "hosoya/triangle.hpp"
#include "hosoya/verify.hpp"

namespace hosoya::cli {

enum class ExitCode : int { Ok = 0, Failures = 1, Usage = 2, Io = 3 };

enum class OutputFormat { Plain, Csv, Json, Dot };

/// Bad arguments or an unsupported combination; maps to exit code 2.
class UsageError : public DomainError {
 public:
  using DomainError::DomainError;
};

inline OutputFormat parse_format(const std::string& text) {
  if (text == "plain") return OutputFormat::Plain;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  if (text == "dot") return OutputFormat::Dot;
  throw UsageError("unknown format '" + text + "' (expected plain, csv, json or dot)");
}

namespace detail {

inline void reject_dot(OutputFormat format, const char* what) {
  if (format == OutputFormat::Dot) throw UsageError(std::string("dot output is only available for graphs, not ") + what);
}

inline std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

inline std::vector<std::string> strings(const std::vector<BigInt>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

inline std::string render_table(const std::vector<std::vector<std::string>>& rows, OutputFormat format,
                                nlohmann::json header) {
  if (format == OutputFormat::Json) {
    header["rows"] = rows;
    return header.dump(2) + "\n";
  }
  const std::string sep = format == OutputFormat::Csv ? "," : " ";
  std::string out;
  for (const auto& r : rows) out += join(r, sep) + "\n";
  return out;
}

}  // namespace detail

// ---- triangle ----

inline std::string cmd_triangle(TriangleKind kind, std::int64_t rows, bool reduce_mod2, OutputFormat format) {
  detail::reject_dot(format, "triangles");
  if (rows < 1) throw UsageError("--rows must be >= 1");
  std::vector<std::vector<std::string>> table;
  for (std::int64_t r = 1; r <= rows; ++r) {
    std::vector<BigInt> values = row(kind, r);
    if (reduce_mod2)
      for (auto& v : values) v = boost::multiprecision::bit_test(v, 0) ? 1 : 0;
    table.push_back(detail::strings(values));
  }
  return detail::render_table(table, format,
                              {{"kind", kind == TriangleKind::DetHosoya ? "det" : "hosoya"}, {"mod2", reduce_mod2}});
}

// ---- matrix ----

inline std::string cmd_matrix(char kind, std::int64_t w, bool reduce_mod2, OutputFormat format) {
  detail::reject_dot(format, "matrices");
  if (w < 1) throw UsageError("-w must be >= 1");
  if (kind != 'S' && kind != 'T') throw UsageError("matrix kind must be S or T");
  const ExactMatrix m = kind == 'S' ? build_S(w) : build_T(w);
  std::vector<std::vector<std::string>> table(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      table[i].push_back(reduce_mod2 ? (boost::multiprecision::bit_test(m(i, j), 0) ? "1" : "0") : m(i, j).str());
  return detail::render_table(table, format, {{"kind", std::string(1, kind)}, {"w", w}, {"mod2", reduce_mod2}});
}

// ---- graph ----

/// DOT names: u1.. first clique, v1.. second clique, z1.. empty part.
inline std::vector<std::string> vertex_names(const FamilySpec& spec) {
  const BlockSizes b = family_blocks(spec);
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= b.u; ++i) names.push_back("u" + std::to_string(i));
  for (std::size_t i = 1; i <= b.v; ++i) names.push_back("v" + std::to_string(i));
  for (std::size_t i = 1; i <= b.z; ++i) names.push_back("z" + std::to_string(i));
  return names;
}

inline std::string render_dot(const Graph& g, const std::vector<std::string>& names, const std::string& title) {
  std::string out = "graph \"" + title + "\" {\n";
  for (const auto& name : names) out += "  " + name + ";\n";
  // edges and loops together, sorted by endpoint labels
  std::vector<std::pair<std::size_t, std::size_t>> pairs = g.edges();
  for (std::size_t v : g.looped_vertices()) pairs.emplace_back(v, v);
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [a, b] : pairs) out += "  " + names[a - 1] + " -- " + names[b - 1] + ";\n";
  return out + "}\n";
}

inline std::string cmd_graph(const std::string& family, OutputFormat format) {
  const FamilySpec spec = parse_family_spec(family);
  const Graph g = family_graph(spec);
  const auto names = vertex_names(spec);
  const std::size_t n = g.vertex_count();
  switch (format) {
    case OutputFormat::Dot: return render_dot(g, names, to_string(spec));
    case OutputFormat::Json: {
      std::vector<std::vector<int>> adjacency(n, std::vector<int>(n, 0));
      for (const auto& [a, b] : g.edges()) adjacency[a - 1][b - 1] = adjacency[b - 1][a - 1] = 1;
      return nlohmann::json{{"family", to_string(spec)},
                            {"n", n},
                            {"vertices", names},
                            {"adjacency", adjacency},
                            {"loops", g.looped_vertices()}}
                 .dump(2) +
             "\n";
    }
    case OutputFormat::Csv: {
      // adjacency matrix with loop flags on the diagonal
      std::string out;
      const ExactMatrix a = g.adjacency_matrix();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out += (j ? "," : "") + a(i, j).str();
        out += "\n";
      }
      return out;
    }
    case OutputFormat::Plain: {
      std::string out = to_string(spec) + ": " + std::to_string(n) + " vertices, " + std::to_string(g.edge_count()) +
                        " edges, " + std::to_string(g.loop_count()) + " loops\n";
      for (const auto& [a, b] : g.edges()) out += names[a - 1] + " " + names[b - 1] + "\n";
      for (std::size_t v : g.looped_vertices()) out += names[v - 1] + " " + names[v - 1] + "\n";
      return out;
    }
  }
  return {};
}

// ---- spectrum ----

struct SpectrumSummary {
  IntPolynomial polynomial;
  RootExtraction extraction;
  bool integral = false;
  std::size_t distinct = 0;
  std::optional<BigInt> energy;
};

inline SpectrumSummary spectrum_summary(const std::string& family, bool laplacian) {
  const FamilySpec spec = parse_family_spec(family);
  const Graph g = family_graph(spec);
  if (laplacian && g.has_loops()) throw UsageError("--laplacian needs a loopless family; " + family + " has loops");
  SpectrumSummary s;
  s.polynomial = monic(laplacian ? laplacian_char_poly(g) : adjacency_char_poly(g));
  s.extraction = extract_integer_roots(s.polynomial);
  s.integral = s.extraction.remainder.degree() == 0;
  s.distinct = distinct_root_count(s.polynomial);
  if (s.integral) s.energy = energy_integral(s.polynomial);
  return s;
}

inline std::string cmd_spectrum(const std::string& family, bool laplacian, OutputFormat format) {
  detail::reject_dot(format, "spectra");
  const SpectrumSummary s = spectrum_summary(family, laplacian);
  const auto roots = detail::strings(s.extraction.integer_roots);
  const std::string energy = s.energy ? s.energy->str() : "";
  switch (format) {
    case OutputFormat::Json: {
      nlohmann::json j{{"family", family},
                       {"matrix", laplacian ? "laplacian" : "adjacency"},
                       {"coefficients", serialize(s.polynomial)},
                       {"integer_roots", roots},
                       {"remainder", serialize(s.extraction.remainder)},
                       {"integral", s.integral},
                       {"distinct_roots", s.distinct}};
      j["energy"] = s.energy ? nlohmann::json(energy) : nlohmann::json(nullptr);
      return j.dump(2) + "\n";
    }
    case OutputFormat::Csv:
      return "key,value\n"
             "polynomial," + to_string(s.polynomial) + "\n"
             "coefficients," + detail::join(serialize(s.polynomial), ";") + "\n"
             "integer_roots," + detail::join(roots, ";") + "\n"
             "remainder," + to_string(s.extraction.remainder) + "\n"
             "integral," + (s.integral ? "true" : "false") + "\n"
             "distinct_roots," + std::to_string(s.distinct) + "\n"
             "energy," + energy + "\n";
    default:
      return "polynomial: " + to_string(s.polynomial) + "\n" +
             "coefficients: " + detail::join(serialize(s.polynomial), " ") + "\n" +
             "integer roots: " + detail::join(roots, " ") + "\n" +
             "remainder: " + to_string(s.extraction.remainder) + "\n" +
             "integral: " + (s.integral ? "true" : "false") + "\n" +
             "distinct roots: " + std::to_string(s.distinct) + "\n" +
             (s.energy ? "energy: " + energy + "\n" : std::string());
  }
}

// ---- condition ----

inline std::string cmd_condition(std::int64_t n, std::int64_t r, OutputFormat format = OutputFormat::Plain) {
  detail::reject_dot(format, "conditions");
  if (n < 1 || r < 1) throw UsageError("n and r must be >= 1");
  const auto witness = integrality_condition(n, r);
  const BigInt disc = integrality_discriminant(n, r);
  const bool square = is_perfect_square(disc);
  switch (format) {
    case OutputFormat::Json: {
      nlohmann::json j{{"n", n}, {"r", r}, {"discriminant", disc.str()}, {"perfect_square", square}};
      j["witness"] = witness ? nlohmann::json{{"p", witness->p.str()}, {"q", witness->q.str()}} : nlohmann::json(nullptr);
      return j.dump(2) + "\n";
    }
    case OutputFormat::Csv:
      return "n,r,p,q,discriminant,perfect_square\n" + std::to_string(n) + "," + std::to_string(r) + "," +
             (witness ? witness->p.str() + "," + witness->q.str() : std::string(",")) + "," + disc.str() + "," +
             (square ? "true" : "false") + "\n";
    default:
      return std::string("witness: ") + (witness ? witness->p.str() + "," + witness->q.str() : "none") + "\n" +
             "discriminant: " + disc.str() + (square ? " (perfect square)" : " (not a perfect square)") + "\n";
  }
}

// ---- verify ----

inline std::string render_report(const VerificationReport& report, OutputFormat format) {
  if (format == OutputFormat::Json) return report_json(report).dump(2) + "\n";
  if (format == OutputFormat::Csv) return report_csv(report);
  throw UsageError("verify reports are written as json or csv");
}

inline std::string verify_summary_line(const VerificationReport& report) {
  return "checks: " + std::to_string(report.checks.size()) + " pass: " + std::to_string(report.summary.pass) +
         " fail: " + std::to_string(report.summary.fail) + " skipped: " + std::to_string(report.summary.skipped) +
         " digest: " + report.digest;
}

}  // namespace hosoya::cli
