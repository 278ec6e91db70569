#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include "json.hpp"

#include "cartprod/graph.hpp"
#include "cartprod/matrix.hpp"

namespace cartprod {

using json = nlohmann::ordered_json;

/// A matrix in either arithmetic mode, as carried by the JSON format.
using MatrixVariant = std::variant<ExactMatrix, ComplexMatrix>;

// ---------------------------------------------------------------------------
// Matrix JSON:
//   {"rows": r, "cols": c, "mode": "exact"|"approx",
//    "entries": [[re, im], ...]}        (row-major)
// Exact entries must have integral components.
// ---------------------------------------------------------------------------

inline json matrix_to_json(const ExactMatrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      entries.push_back({m(i, j).re(), m(i, j).im()});
    }
  }
  return {{"rows", m.rows()},
          {"cols", m.cols()},
          {"mode", "exact"},
          {"entries", std::move(entries)}};
}

inline json matrix_to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      entries.push_back({m(i, j).real(), m(i, j).imag()});
    }
  }
  return {{"rows", m.rows()},
          {"cols", m.cols()},
          {"mode", "approx"},
          {"entries", std::move(entries)}};
}

inline json matrix_to_json(const MatrixVariant& m) {
  return std::visit([](const auto& v) { return matrix_to_json(v); }, m);
}

inline MatrixVariant matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("mode") || !j.contains("entries")) {
    throw parse_error("matrix JSON needs rows, cols, mode and entries");
  }
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer()) {
    throw parse_error("matrix JSON: rows and cols must be integers");
  }
  const auto rows_signed = j["rows"].get<std::int64_t>();
  const auto cols_signed = j["cols"].get<std::int64_t>();
  if (rows_signed < 1 || cols_signed < 1) {
    throw parse_error("matrix JSON: rows and cols must be positive");
  }
  const auto rows = static_cast<std::size_t>(rows_signed);
  const auto cols = static_cast<std::size_t>(cols_signed);
  const std::string mode = j["mode"].get<std::string>();
  const json& entries = j["entries"];
  if (!entries.is_array() || entries.size() != rows * cols) {
    throw parse_error("matrix JSON: entries must hold rows*cols pairs");
  }
  const auto component = [&](const json& e, int which) -> const json& {
    if (!e.is_array() || e.size() != 2) {
      throw parse_error("matrix JSON: each entry must be an [re, im] pair");
    }
    return e[which];
  };
  if (mode == "exact") {
    ExactMatrix m(rows, cols);
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const json& re = component(entries[k], 0);
      const json& im = component(entries[k], 1);
      if (!re.is_number_integer() || !im.is_number_integer()) {
        throw parse_error("matrix JSON: exact entries must be integral");
      }
      m(k / cols, k % cols) =
          GaussInt{re.get<std::int64_t>(), im.get<std::int64_t>()};
    }
    return m;
  }
  if (mode == "approx") {
    ComplexMatrix m(rows, cols);
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const json& re = component(entries[k], 0);
      const json& im = component(entries[k], 1);
      if (!re.is_number() || !im.is_number()) {
        throw parse_error("matrix JSON: approx entries must be numeric");
      }
      m(k / cols, k % cols) = {re.get<double>(), im.get<double>()};
    }
    return m;
  }
  throw parse_error("matrix JSON: mode must be \"exact\" or \"approx\"");
}

inline MatrixVariant parse_matrix_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw parse_error("input is not valid JSON");
  }
  return matrix_from_json(j);
}

// ---------------------------------------------------------------------------
// Edge-list format (DIMACS-like):
//   c <comment>
//   p <vertex-count>
//   e <u> <v>          (1-based indices)
// ---------------------------------------------------------------------------

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::optional<Graph> graph;
  const auto fail = [&](const std::string& what) -> void {
    throw parse_error("edge list line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag)) {
      continue;  // blank line
    }
    if (tag == "c") {
      continue;
    }
    if (tag == "p") {
      if (graph) {
        fail("duplicate p line");
      }
      long long n = 0;
      if (!(fields >> n) || n < 1) {
        fail("p line needs a positive vertex count");
      }
      graph.emplace(static_cast<std::size_t>(n));
      continue;
    }
    if (tag == "e") {
      if (!graph) {
        fail("e line before the p line");
      }
      long long u = 0;
      long long v = 0;
      if (!(fields >> u >> v)) {
        fail("e line needs two vertex indices");
      }
      const auto n = static_cast<long long>(graph->vertex_count());
      if (u < 1 || u > n || v < 1 || v > n) {
        fail("vertex index out of range 1.." + std::to_string(n));
      }
      if (u == v) {
        fail("self-loops are not allowed");
      }
      graph->add_edge(static_cast<std::size_t>(u - 1),
                      static_cast<std::size_t>(v - 1));
      continue;
    }
    fail("unknown line tag '" + tag + "'");
  }
  if (!graph) {
    throw parse_error("edge list has no p line");
  }
  return *graph;
}

inline std::string edge_list_to_string(const Graph& g) {
  std::string out = "p " + std::to_string(g.vertex_count()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// File helpers
// ---------------------------------------------------------------------------

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw parse_error("cannot open file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Graph load_edge_list(const std::filesystem::path& path) {
  return parse_edge_list(read_text_file(path));
}

inline MatrixVariant load_matrix(const std::filesystem::path& path) {
  return parse_matrix_json(read_text_file(path));
}

}  // namespace cartprod
