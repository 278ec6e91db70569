#pragma once

#include <cctype>
#include <filesystem>
#include <string>

#include "cartprod/identities.hpp"
#include "cartprod/io.hpp"
#include "cartprod/spectra.hpp"
#include "cartprod/verify.hpp"

namespace cartprod::cli {

/// Outcome of one subcommand: the JSON payload goes to standard output,
/// the diagnostic to standard error. Exit code 0 means success and every
/// checked identity holding, 1 means a counterexample or a refused
/// factorization, 2 means unusable input.
struct CommandResult {
  int exit_code = 0;
  json payload;  // null when nothing belongs on stdout
  std::string diagnostic;
};

namespace detail {

template <class Fn>
CommandResult guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return {2, json(), e.what()};
  }
}

inline json inertia_json(const InertiaTriple& t) {
  return {t.positive, t.zero, t.negative};
}

}  // namespace detail

/// Vertex count, Wiener index, transmissions, distance spectral radius and
/// distance inertia of one connected graph.
inline CommandResult run_invariants(const std::filesystem::path& graph_path) {
  return detail::guarded([&]() -> CommandResult {
    const Graph g = load_edge_list(graph_path);
    const ExactMatrix d = distance_matrix(g);
    const auto trans = transmissions(g);
    const SpectrumResult spectrum = jacobi_eigenvalues(d);
    json payload = {
        {"status", "ok"},
        {"vertices", g.vertex_count()},
        {"edges", g.edge_count()},
        {"wiener", wiener_index(g)},
        {"transmissions", trans},
        {"transmission_regular", is_transmission_regular(g)},
        {"rho", spectrum.eigenvalues.front()},
        {"inertia", detail::inertia_json(inertia(d))},
    };
    return {0, std::move(payload), ""};
  });
}

enum class EmitKind { graph, dist, both };

/// Builds G1 [] G2 and reports whether D(G1 [] G2) = D(G1) (/) D(G2).
inline CommandResult run_product(const std::filesystem::path& g1_path,
                                 const std::filesystem::path& g2_path,
                                 EmitKind emit) {
  return detail::guarded([&]() -> CommandResult {
    const Graph g1 = load_edge_list(g1_path);
    const Graph g2 = load_edge_list(g2_path);
    const Graph product = graph_cartesian_product(g1, g2);
    const bool identity_holds = distance_cartesian_check(g1, g2);
    json payload = {
        {"status", "ok"},
        {"vertices", product.vertex_count()},
        {"edges", product.edge_count()},
        {"cartesian_identity_holds", identity_holds},
    };
    if (emit == EmitKind::graph || emit == EmitKind::both) {
      payload["graph"] = edge_list_to_string(product);
    }
    if (emit == EmitKind::dist || emit == EmitKind::both) {
      payload["distance_matrix"] = matrix_to_json(distance_matrix(product));
    }
    return {0, std::move(payload), ""};
  });
}

/// Canonical Cartesian factorization with b_{0,0} = 0, or the
/// not_a_cartesian_product refusal (exit 1).
inline CommandResult run_factorize(const std::filesystem::path& matrix_path,
                                   std::size_t m, std::size_t n) {
  return detail::guarded([&]() -> CommandResult {
    const MatrixVariant input = load_matrix(matrix_path);
    json factors;
    bool ok = false;
    std::visit(
        [&](const auto& mat) {
          using Mat = std::decay_t<decltype(mat)>;
          double tol = 0.0;
          if constexpr (!is_exact_scalar_v<typename Mat::value_type>) {
            tol = 1e-9 * std::max(1.0, max_abs_value(mat));
          }
          const auto f = cartesian_factorize(mat, Dims{m, n}, tol);
          if (f) {
            ok = true;
            factors = {{"a", matrix_to_json(f->first)},
                       {"b", matrix_to_json(f->second)}};
          }
        },
        input);
    if (!ok) {
      json payload = {{"status", "not_a_cartesian_product"},
                      {"split", {m, n}}};
      return {1, std::move(payload), "no Cartesian factorization exists"};
    }
    json payload = {{"status", "ok"},
                    {"split", {m, n}},
                    {"a", std::move(factors["a"])},
                    {"b", std::move(factors["b"])}};
    return {0, std::move(payload), ""};
  });
}

/// Jacobi spectrum of a graph's distance matrix or a matrix JSON file.
/// Matrix input must be real symmetric.
inline CommandResult run_spectrum(const std::filesystem::path& input_path,
                                  double tol = 1e-10) {
  return detail::guarded([&]() -> CommandResult {
    const std::string text = read_text_file(input_path);
    std::size_t first = 0;
    while (first < text.size() &&
           std::isspace(static_cast<unsigned char>(text[first]))) {
      ++first;
    }
    RealMatrix m(1, 1);
    if (first < text.size() && text[first] == '{') {
      const MatrixVariant v = parse_matrix_json(text);
      m = std::visit(
          [](const auto& mat) {
            using Mat = std::decay_t<decltype(mat)>;
            if constexpr (is_exact_scalar_v<typename Mat::value_type>) {
              return to_real(mat);
            } else {
              return to_real(mat, 1e-12 * std::max(1.0, max_abs_value(mat)));
            }
          },
          v);
    } else {
      m = to_real(distance_matrix(parse_edge_list(text)));
    }
    const SpectrumResult spectrum = jacobi_eigenvalues(m, tol);
    json payload = {
        {"status", "ok"},
        {"order", m.rows()},
        {"eigenvalues", spectrum.eigenvalues},
        {"sweeps", spectrum.sweeps},
        {"off_diag_norm", spectrum.off_diag_norm},
        {"inertia", detail::inertia_json(inertia(m))},
    };
    return {0, std::move(payload), ""};
  });
}

/// Seeded randomized verification of the identity suites.
inline CommandResult run_verify(const std::string& suite, std::uint64_t trials,
                                std::uint64_t seed, std::size_t max_order) {
  return detail::guarded([&]() -> CommandResult {
    const std::vector<VerifyReport> reports =
        run_campaign(suite, trials, seed, max_order);
    std::uint64_t failures = 0;
    json report_list = json::array();
    for (const auto& r : reports) {
      failures += r.failures;
      report_list.push_back(report_to_json(r));
    }
    json payload = {
        {"status", failures == 0 ? "ok" : "verification_failed"},
        {"suite", suite},
        {"trials", trials},
        {"seed", seed},
        {"max_order", max_order},
        {"total_failures", failures},
        {"reports", std::move(report_list)},
    };
    return {failures == 0 ? 0 : 1, std::move(payload), ""};
  });
}

}  // namespace cartprod::cli
