#include "cartprod/spectra.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "eig_oracle.hpp"
#include "graph_gen.hpp"

namespace cartprod {
namespace {

TEST(Jacobi, DiagonalNeedsNoSweeps) {
  RealMatrix m(3, 3);
  m(0, 0) = 2.0;
  m(1, 1) = -1.0;
  m(2, 2) = 5.0;
  const SpectrumResult r = jacobi_eigenvalues(m);
  EXPECT_EQ(r.sweeps, 0u);
  EXPECT_EQ(r.eigenvalues, (std::vector<double>{5.0, 2.0, -1.0}));
}

TEST(Jacobi, TwoByTwoSwap) {
  const SpectrumResult r = jacobi_eigenvalues(ExactMatrix{{0, 1}, {1, 0}});
  ASSERT_EQ(r.eigenvalues.size(), 2u);
  EXPECT_NEAR(r.eigenvalues[0], 1.0, 1e-12);
  EXPECT_NEAR(r.eigenvalues[1], -1.0, 1e-12);
}

TEST(Jacobi, CycleDistanceSpectrum) {
  const SpectrumResult r =
      jacobi_eigenvalues(distance_matrix(cycle_graph(4)));
  ASSERT_EQ(r.eigenvalues.size(), 4u);
  EXPECT_NEAR(r.eigenvalues[0], 4.0, 1e-9);
  EXPECT_NEAR(r.eigenvalues[1], 0.0, 1e-9);
  EXPECT_NEAR(r.eigenvalues[2], -2.0, 1e-9);
  EXPECT_NEAR(r.eigenvalues[3], -2.0, 1e-9);
}

TEST(Jacobi, InputValidation) {
  RealMatrix bad(2, 2);
  bad(0, 1) = 1.0;
  EXPECT_THROW(jacobi_eigenvalues(bad), symmetry_error);
  EXPECT_THROW(jacobi_eigenvalues(identity<double>(2), 0.0),
               std::invalid_argument);
  EXPECT_THROW(jacobi_eigenvalues(to_real(ones(2, 3))), dimension_error);
}

TEST(Jacobi, MatchesClosedFormOracle) {
  TrialRng rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.index(3);
    RealMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        m(i, j) = static_cast<double>(rng.int_in(-9, 9));
        m(j, i) = m(i, j);
      }
    }
    const auto jac = jacobi_eigenvalues(m).eigenvalues;
    const auto oracle = testoracle::symmetric_eigenvalues_closed_form(m);
    ASSERT_EQ(jac.size(), oracle.size());
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(jac[i], oracle[i], 1e-8);
    }
  }
}

TEST(Jacobi, EigenvalueSumMatchesTrace) {
  TrialRng rng(52);
  for (const std::size_t n : {5u, 12u, 25u, 50u}) {
    RealMatrix m(n, n);
    double max_entry = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        m(i, j) = static_cast<double>(rng.int_in(-9, 9));
        m(j, i) = m(i, j);
        max_entry = std::max(max_entry, std::fabs(m(i, j)));
      }
    }
    const auto eig = jacobi_eigenvalues(m).eigenvalues;
    double sum = 0.0;
    double tr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sum += eig[i];
      tr += m(i, i);
    }
    EXPECT_NEAR(sum, tr, 1e-9 * static_cast<double>(n) * max_entry);
  }
}

TEST(Inertia, SpotValues) {
  EXPECT_EQ(inertia(zeros(3, 3)), (InertiaTriple{0, 3, 0}));
  EXPECT_EQ(inertia(distance_matrix(cycle_graph(4))),
            (InertiaTriple{1, 1, 2}));
  const Graph square =
      graph_cartesian_product(path_graph(2), path_graph(2));
  EXPECT_EQ(inertia(distance_matrix(square)), (InertiaTriple{1, 1, 2}));
}

TEST(Inertia, ComponentsSumToOrderAndPermutationInvariant) {
  TrialRng rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng.index(5);
    const ExactMatrix d =
        distance_matrix(testgen::random_connected_graph(rng, n));
    const InertiaTriple before = inertia(d);
    EXPECT_EQ(before.order(), n);
    // Random symmetric relabeling P^T D P.
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n; i > 1; --i) {
      std::swap(perm[i - 1], perm[rng.index(i)]);
    }
    ExactMatrix p = zeros(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      p(i, perm[i]) = GaussInt{1};
    }
    const ExactMatrix conjugated = matmul(matmul(transpose(p), d), p);
    EXPECT_EQ(inertia(conjugated), before);
  }
}

TEST(DistanceSpectralRadius, SpotValues) {
  EXPECT_NEAR(distance_spectral_radius(complete_graph(2)), 1.0, 1e-12);
  EXPECT_NEAR(distance_spectral_radius(cycle_graph(4)), 4.0, 1e-9);
  EXPECT_NEAR(distance_spectral_radius(path_graph(3)), 1.0 + std::sqrt(3.0),
              1e-9);
}

TEST(SpectralRadiusBounds, SpotValues) {
  const Graph k2 = complete_graph(2);
  EXPECT_DOUBLE_EQ(spectral_radius_lower_bound(k2, k2), 2.0);
  EXPECT_DOUBLE_EQ(spectral_radius_row_sum_bound(k2, k2), 4.0);
  EXPECT_NEAR(
      distance_spectral_radius(graph_cartesian_product(k2, k2)), 4.0, 1e-9);

  const Graph c4 = cycle_graph(4);
  EXPECT_DOUBLE_EQ(spectral_radius_lower_bound(c4, c4), 16.0);
  const double rho =
      distance_spectral_radius(graph_cartesian_product(c4, c4));
  EXPECT_NEAR(rho, spectral_radius_row_sum_bound(c4, c4), 1e-7);
  EXPECT_NEAR(rho, 32.0, 1e-7);

  EXPECT_NEAR(spectral_radius_lower_bound(k2, path_graph(3)), 25.0 / 6.0,
              1e-12);
}

TEST(SpectralRadiusBounds, HoldOnRandomPairs) {
  TrialRng rng(54);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g1 = testgen::random_connected_graph(rng, 1 + rng.index(5));
    const Graph g2 = testgen::random_connected_graph(rng, 1 + rng.index(5));
    const double rho =
        distance_spectral_radius(graph_cartesian_product(g1, g2));
    EXPECT_GE(rho, spectral_radius_lower_bound(g1, g2) - 1e-9);
    EXPECT_GE(rho, spectral_radius_row_sum_bound(g1, g2) - 1e-9);
    if (is_transmission_regular(g1) && is_transmission_regular(g2)) {
      EXPECT_NEAR(rho, spectral_radius_row_sum_bound(g1, g2), 1e-7);
    }
  }
}

TEST(InertiaProductCheck, K2Pair) {
  const auto [actual, predicted] =
      inertia_product_check(complete_graph(2), complete_graph(2));
  EXPECT_EQ(actual, (InertiaTriple{1, 1, 2}));
  EXPECT_EQ(predicted, actual);
  // The identified graph is P3 with distance inertia (1, 0, 2).
  EXPECT_EQ(inertia(distance_matrix(path_graph(3))), (InertiaTriple{1, 0, 2}));
}

TEST(InertiaProductCheck, P3PairAndExplicitVertices) {
  const auto [actual, predicted] =
      inertia_product_check(path_graph(3), path_graph(3));
  EXPECT_EQ(actual, predicted);
  const auto [a2, p2] =
      inertia_product_check(path_graph(3), cycle_graph(4), 0, 2);
  EXPECT_EQ(a2, p2);
}

TEST(InertiaProductCheck, TreePairsHaveStructuredInertia) {
  TrialRng rng(55);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t m = 2 + rng.index(5);
    const std::size_t n = 2 + rng.index(5);
    const Graph t1 = testgen::random_tree(rng, m);
    const Graph t2 = testgen::random_tree(rng, n);
    const InertiaTriple expected{1, (m - 1) * (n - 1), m + n - 2};
    EXPECT_EQ(inertia(distance_matrix(graph_cartesian_product(t1, t2))),
              expected);
    const auto [actual, predicted] = inertia_product_check(t1, t2);
    EXPECT_EQ(actual, expected);
    EXPECT_EQ(predicted, expected);
  }
}

}  // namespace
}  // namespace cartprod
