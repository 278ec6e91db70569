#include "cartprod/matrix.hpp"

#include <cstdlib>

#include <gtest/gtest.h>

#include "cartprod/verify.hpp"

namespace cartprod {
namespace {

TEST(Ones, SmallCases) {
  EXPECT_EQ(ones(1, 1), (ExactMatrix{{1}}));
  EXPECT_EQ(ones(2, 2), (ExactMatrix{{1, 1}, {1, 1}}));
  const ExactMatrix j23 = ones(2, 3);
  EXPECT_EQ(j23.rows(), 2u);
  EXPECT_EQ(j23.cols(), 3u);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(j23(i, j), GaussInt{1});
    }
  }
  EXPECT_THROW(ones(0, 3), dimension_error);
}

TEST(Kron, OneByOne) {
  EXPECT_EQ(kron(ExactMatrix{{2}}, ExactMatrix{{3}}), (ExactMatrix{{6}}));
}

TEST(Kron, BlockExpansion) {
  const ExactMatrix a{{1, 2}, {3, 4}};
  const ExactMatrix b{{0, 5}, {6, 7}};
  const ExactMatrix expected{{0, 5, 0, 10},
                             {6, 7, 12, 14},
                             {0, 15, 0, 20},
                             {18, 21, 24, 28}};
  EXPECT_EQ(kron(a, b), expected);
}

TEST(Kron, AllOnesRightIdentity) {
  TrialRng rng(11);
  const ExactMatrix a = random_matrix(rng, 3);
  EXPECT_EQ(kron(a, ones(1, 1)), a);
}

TEST(Hadamard, Basics) {
  const ExactMatrix a{{1, 2}, {3, 4}};
  EXPECT_EQ(hadamard(a, ExactMatrix{{0, 1}, {1, 0}}),
            (ExactMatrix{{0, 2}, {3, 0}}));
  EXPECT_EQ(hadamard(a, ones(2, 2)), a);
  EXPECT_EQ(hadamard(a, zeros(2, 2)), zeros(2, 2));
  EXPECT_THROW(hadamard(a, ones(2, 3)), dimension_error);
}

TEST(Cartesian, BlockExpansion) {
  const ExactMatrix a{{1, 2}, {3, 4}};
  const ExactMatrix b{{5, 6}, {7, 8}};
  const ExactMatrix expected{{6, 7, 7, 8},
                             {8, 9, 9, 10},
                             {8, 9, 9, 10},
                             {10, 11, 11, 12}};
  EXPECT_EQ(cartesian(a, b), expected);
}

TEST(Cartesian, ScalarLeftFactorIsShift) {
  TrialRng rng(12);
  const ExactMatrix b = random_matrix(rng, 3);
  const GaussInt k{4, -1};
  EXPECT_EQ(cartesian(ExactMatrix{{k}}, b),
            add(b, scale(k, ones(3, 3))));
}

TEST(Cartesian, OppositeConstantPairGivesZero) {
  const GaussInt k{3};
  const ExactMatrix a(2, 2, k);
  const ExactMatrix b(3, 3, -k);
  EXPECT_EQ(cartesian(a, b), zeros(6, 6));
}

TEST(Cartesian, RejectsNonSquare) {
  EXPECT_THROW(cartesian(ones(2, 3), ones(2, 2)), dimension_error);
}

TEST(Cartesian, MatchesKroneckerForm) {
  TrialRng rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t m = random_order(rng, 3);
    const std::size_t n = random_order(rng, 3);
    const ExactMatrix a = random_matrix(rng, m);
    const ExactMatrix b = random_matrix(rng, n);
    EXPECT_EQ(cartesian(a, b),
              add(kron(a, ones(n, n)), kron(ones(m, m), b)));
  }
}

TEST(Cartesian, Associativity) {
  TrialRng rng(14);
  for (int trial = 0; trial < 25; ++trial) {
    const ExactMatrix a = random_matrix(rng, random_order(rng, 3));
    const ExactMatrix b = random_matrix(rng, random_order(rng, 3));
    const ExactMatrix c = random_matrix(rng, random_order(rng, 3));
    EXPECT_EQ(cartesian(cartesian(a, b), c), cartesian(a, cartesian(b, c)));
  }
}

TEST(CartesianPower, SingleFactorIsIdentityOp) {
  TrialRng rng(15);
  const ExactMatrix a = random_matrix(rng, 3);
  EXPECT_EQ(cartesian_power(a, 1), a);
}

TEST(CartesianPower, OneByOneTriples) {
  EXPECT_EQ(cartesian_power(ExactMatrix{{1}}, 3), (ExactMatrix{{3}}));
}

TEST(CartesianPower, TraceOfIdentitySquare) {
  // tr(I_2 ^[2]) = k n^{k-1} tr = 2 * 2 * 2 = 8
  EXPECT_EQ(trace(cartesian_power(identity<GaussInt>(2), 2)), GaussInt{8});
}

TEST(CartesianPower, FoldOrderIrrelevant) {
  TrialRng rng(16);
  const ExactMatrix a = random_matrix(rng, 2);
  const ExactMatrix left = cartesian(cartesian(a, a), a);
  const ExactMatrix right = cartesian(a, cartesian(a, a));
  EXPECT_EQ(cartesian_power(a, 3), left);
  EXPECT_EQ(left, right);
}

TEST(Matmul, Basics) {
  const ExactMatrix a{{1, 2}, {3, 4}};
  const ExactMatrix b{{5, 6}, {7, 8}};
  EXPECT_EQ(matmul(a, b), (ExactMatrix{{19, 22}, {43, 50}}));
  EXPECT_EQ(matmul(identity<GaussInt>(2), a), a);
  EXPECT_EQ(matmul(ones(2, 2), ones(2, 2)), scale(GaussInt{2}, ones(2, 2)));
  EXPECT_THROW(matmul(a, ones(3, 2)), dimension_error);
}

TEST(AddScale, Basics) {
  const ExactMatrix a{{1, 2}, {3, 4}};
  EXPECT_EQ(add(a, zeros(2, 2)), a);
  EXPECT_EQ(scale(GaussInt{2}, a), (ExactMatrix{{2, 4}, {6, 8}}));
  EXPECT_THROW(add(a, ones(3, 3)), dimension_error);
}

TEST(AddScale, KroneckerScalarPullOut) {
  TrialRng rng(17);
  const ExactMatrix a = random_matrix(rng, 2);
  const ExactMatrix b = random_matrix(rng, 3);
  const GaussInt p{3, 1};
  const GaussInt q{-2, 5};
  EXPECT_EQ(kron(scale(p, a), scale(q, b)), scale(p * q, kron(a, b)));
}

TEST(Transpose, Basics) {
  EXPECT_EQ(transpose(ExactMatrix{{1, 2}, {3, 4}}),
            (ExactMatrix{{1, 3}, {2, 4}}));
  const ExactMatrix real{{1, 2}, {3, 4}};
  EXPECT_EQ(conj_transpose(real), transpose(real));
  const ExactMatrix imag{{GaussInt{0, 1}}};
  EXPECT_EQ(conj_transpose(imag), (ExactMatrix{{GaussInt{0, -1}}}));
}

TEST(Transpose, DistributesOverKron) {
  TrialRng rng(18);
  const ExactMatrix a = random_matrix(rng, 2);
  const ExactMatrix b = random_matrix(rng, 3);
  EXPECT_EQ(transpose(kron(a, b)), kron(transpose(a), transpose(b)));
  EXPECT_EQ(conj_transpose(kron(a, b)),
            kron(conj_transpose(a), conj_transpose(b)));
}

TEST(Reductions, TraceEntrySumRowSums) {
  const ExactMatrix a{{1, 2}, {3, 4}};
  EXPECT_EQ(trace(a), GaussInt{5});
  EXPECT_EQ(entry_sum(a), GaussInt{10});
  const auto sums = row_sums(a);
  ASSERT_EQ(sums.size(), 2u);
  EXPECT_EQ(sums[0], GaussInt{3});
  EXPECT_EQ(sums[1], GaussInt{7});
  EXPECT_THROW(trace(ones(2, 3)), dimension_error);
}

TEST(Reductions, KroneckerMultiplicativity) {
  TrialRng rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const ExactMatrix a = random_matrix(rng, random_order(rng, 3));
    const ExactMatrix b = random_matrix(rng, random_order(rng, 3));
    EXPECT_EQ(trace(kron(a, b)), trace(a) * trace(b));
    EXPECT_EQ(entry_sum(kron(a, b)), entry_sum(a) * entry_sum(b));
  }
}

TEST(Matmul, MixedProductLemma) {
  TrialRng rng(20);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = random_order(rng, 3);
    const std::size_t n = random_order(rng, 3);
    const ExactMatrix a = random_matrix(rng, m);
    const ExactMatrix b = random_matrix(rng, n);
    const ExactMatrix c = random_matrix(rng, m);
    const ExactMatrix d = random_matrix(rng, n);
    EXPECT_EQ(matmul(kron(a, b), kron(c, d)),
              kron(matmul(a, c), matmul(b, d)));
  }
}

TEST(CommutationMatrix, OneByOne) {
  EXPECT_EQ(commutation_matrix<GaussInt>({1, 1}), identity<GaussInt>(1));
}

TEST(CommutationMatrix, TwoByTwoSwapsMiddleCoordinates) {
  const ExactMatrix expected{{1, 0, 0, 0},
                             {0, 0, 1, 0},
                             {0, 1, 0, 0},
                             {0, 0, 0, 1}};
  EXPECT_EQ(commutation_matrix<GaussInt>({2, 2}), expected);
}

TEST(CommutationMatrix, SimilarityOnBasisPairs) {
  // Exhaustive check over all matrix-unit pairs for a few (m, n) splits.
  for (const auto [m, n] : {Dims{2, 2}, Dims{2, 3}, Dims{3, 2}}) {
    const ExactMatrix p = commutation_matrix<GaussInt>({m, n});
    const ExactMatrix pt = transpose(p);
    EXPECT_EQ(matmul(pt, p), identity<GaussInt>(m * n));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t r = 0; r < n; ++r) {
          for (std::size_t c = 0; c < n; ++c) {
            ExactMatrix eij = zeros(m, m);
            eij(i, j) = GaussInt{1};
            ExactMatrix erc = zeros(n, n);
            erc(r, c) = GaussInt{1};
            EXPECT_EQ(matmul(matmul(pt, kron(eij, erc)), p), kron(erc, eij));
          }
        }
      }
    }
  }
}

TEST(CommutationMatrix, IntertwinesCartesianProduct) {
  TrialRng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = random_order(rng, 3);
    const std::size_t n = random_order(rng, 3);
    const ExactMatrix a = random_matrix(rng, m);
    const ExactMatrix b = random_matrix(rng, n);
    const ExactMatrix p = commutation_matrix<GaussInt>({m, n});
    EXPECT_EQ(matmul(matmul(transpose(p), cartesian(a, b)), p),
              cartesian(b, a));
  }
}

TEST(Capacity, OversizedRequestsFailFast) {
  EXPECT_THROW(ones(std::size_t{1} << 13, std::size_t{1} << 13),
               capacity_error);
  // 3^16 = 43M exceeds the 2^24 default cap before anything is built.
  EXPECT_THROW(cartesian_power(ones(3, 3), 16), capacity_error);
}

TEST(Capacity, EnvironmentOverride) {
  ASSERT_EQ(setenv("CARTPROD_CAPACITY", "100", 1), 0);
  EXPECT_THROW(ones(11, 10), capacity_error);
  EXPECT_NO_THROW(ones(10, 10));
  ASSERT_EQ(unsetenv("CARTPROD_CAPACITY"), 0);
  EXPECT_NO_THROW(ones(11, 10));
}

TEST(Overflow, ExactArithmeticIsChecked) {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  const ExactMatrix a{{GaussInt{big}}};
  EXPECT_THROW(scale(GaussInt{2}, a), arithmetic_overflow);
  EXPECT_THROW(add(a, a), arithmetic_overflow);
  EXPECT_NO_THROW(sub(a, a));
}

TEST(GaussIntScalar, ConjAndDiv) {
  const GaussInt v{6, -4};
  EXPECT_EQ(v.conj(), (GaussInt{6, 4}));
  EXPECT_EQ(exact_div(v, 2), (GaussInt{3, -2}));
  EXPECT_FALSE(exact_div(v, 4).has_value());
  EXPECT_FALSE(exact_div(v, 0).has_value());
}

TEST(Predicates, SymmetrySkewDiagonal) {
  EXPECT_TRUE(is_symmetric(ExactMatrix{{1, 2}, {2, 3}}));
  EXPECT_FALSE(is_symmetric(ExactMatrix{{1, 2}, {3, 4}}));
  EXPECT_TRUE(is_skew_symmetric(ExactMatrix{{0, 2}, {-2, 0}}));
  EXPECT_FALSE(is_skew_symmetric(ExactMatrix{{1, 2}, {-2, 0}}));
  EXPECT_TRUE(is_diagonal(identity<GaussInt>(3)));
  EXPECT_FALSE(is_diagonal(ones(2, 2)));
  EXPECT_TRUE(is_zero(zeros(2, 2)));
}

TEST(Conversions, RealAndComplex) {
  const ExactMatrix a{{1, 2}, {3, 4}};
  const RealMatrix r = to_real(a);
  EXPECT_DOUBLE_EQ(r(1, 0), 3.0);
  EXPECT_THROW(to_real(ExactMatrix{{GaussInt{1, 1}}}), dimension_error);
  const ComplexMatrix c = to_complex(ExactMatrix{{GaussInt{1, -2}}});
  EXPECT_DOUBLE_EQ(c(0, 0).imag(), -2.0);
}

TEST(ApproxMode, ComplexProductsWork) {
  const ComplexMatrix a{{{1.0, 0.5}, {0.0, 0.0}}, {{2.0, 0.0}, {1.0, -1.0}}};
  const ComplexMatrix b{{{0.0, 1.0}}};
  const ComplexMatrix prod = cartesian(a, b);
  EXPECT_EQ(prod.rows(), 2u);
  EXPECT_TRUE(approx_equal(prod(0, 0), std::complex<double>(1.0, 1.5), 1e-12));
  EXPECT_TRUE(matrices_equal(transpose(cartesian(a, a)),
                             cartesian(transpose(a), transpose(a)), 1e-12));
}

}  // namespace
}  // namespace cartprod
