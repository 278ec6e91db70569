#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cartprod/cli.hpp"

namespace {

int finish(const cartprod::cli::CommandResult& result) {
  if (!result.payload.is_null()) {
    std::cout << result.payload.dump(2) << "\n";
  }
  if (!result.diagnostic.empty()) {
    std::cerr << "error: " << result.diagnostic << "\n";
  }
  return result.exit_code;
}

bool parse_split(const std::string& text, std::size_t& m, std::size_t& n) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    return false;
  }
  try {
    std::size_t pos = 0;
    const unsigned long long mv = std::stoull(text.substr(0, comma), &pos);
    if (pos != comma) {
      return false;
    }
    const std::string rest = text.substr(comma + 1);
    const unsigned long long nv = std::stoull(rest, &pos);
    if (pos != rest.size() || mv < 1 || nv < 1) {
      return false;
    }
    m = static_cast<std::size_t>(mv);
    n = static_cast<std::size_t>(nv);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cartesian products of matrices and graphs: invariants, "
               "factorization and identity verification"};
  app.require_subcommand(1);

  std::string graph_path;
  auto* invariants =
      app.add_subcommand("invariants", "Distance invariants of a graph");
  invariants->add_option("graph", graph_path, "edge-list file")->required();

  std::string g1_path;
  std::string g2_path;
  std::string emit = "graph";
  auto* product = app.add_subcommand(
      "product", "Cartesian product of two graphs and its distance matrix");
  product->add_option("g1", g1_path, "first edge-list file")->required();
  product->add_option("g2", g2_path, "second edge-list file")->required();
  product->add_option("--emit", emit, "what to emit: graph, dist or both")
      ->check(CLI::IsMember({"graph", "dist", "both"}));

  std::string matrix_path;
  std::string split;
  auto* factorize = app.add_subcommand(
      "factorize", "Split a matrix JSON file into a Cartesian product");
  factorize->add_option("matrix", matrix_path, "matrix JSON file")->required();
  factorize->add_option("--split", split, "factor orders as m,n")->required();

  std::string spectrum_path;
  double tol = 1e-10;
  auto* spectrum = app.add_subcommand(
      "spectrum", "Jacobi eigenvalues of a graph distance matrix or a "
                  "matrix JSON file");
  spectrum->add_option("input", spectrum_path, "edge-list or matrix JSON file")
      ->required();
  spectrum->add_option("--tol", tol, "relative off-diagonal target");

  std::string suite = "all";
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t max_order = 3;
  auto* verify = app.add_subcommand(
      "verify", "Seeded randomized verification of the identity suites");
  verify->add_option("--suite", suite, "suite name or \"all\"");
  verify->add_option("--trials", trials, "trials per suite");
  verify->add_option("--seed", seed, "64-bit generator seed");
  verify->add_option("--max-order", max_order, "largest factor order (1..4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (invariants->parsed()) {
    return finish(cartprod::cli::run_invariants(graph_path));
  }
  if (product->parsed()) {
    const auto kind = emit == "graph"  ? cartprod::cli::EmitKind::graph
                      : emit == "dist" ? cartprod::cli::EmitKind::dist
                                       : cartprod::cli::EmitKind::both;
    return finish(cartprod::cli::run_product(g1_path, g2_path, kind));
  }
  if (factorize->parsed()) {
    std::size_t m = 0;
    std::size_t n = 0;
    if (!parse_split(split, m, n)) {
      std::cerr << "error: --split expects m,n with positive integers\n";
      return 2;
    }
    return finish(cartprod::cli::run_factorize(matrix_path, m, n));
  }
  if (spectrum->parsed()) {
    return finish(cartprod::cli::run_spectrum(spectrum_path, tol));
  }
  return finish(cartprod::cli::run_verify(suite, trials, seed, max_order));
}
