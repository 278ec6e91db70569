#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "cartprod/matrix.hpp"

namespace cartprod {

// ---------------------------------------------------------------------------
// Trace closed forms
//
// Every 1/n_i denominator is cleared by multiplying through with the other
// orders, so the exact ring never needs a division.
// ---------------------------------------------------------------------------

/// One summand k_i * A_i of a weighted Cartesian chain.
template <Scalar T>
struct WeightedFactor {
  T weight;
  Matrix<T> matrix;
};

/// tr(k_1 A_1 (/) ... (/) k_t A_t) as sum_i k_i tr(A_i) prod_{j != i} n_j.
template <Scalar T>
T trace_cartesian_closed_form(const std::vector<WeightedFactor<T>>& factors) {
  if (factors.empty()) {
    throw dimension_error("trace_cartesian_closed_form requires >= 1 factor");
  }
  std::vector<T> traces;
  std::vector<std::size_t> orders;
  for (const auto& f : factors) {
    detail::require_square(f.matrix, "trace_cartesian_closed_form");
    traces.push_back(trace(f.matrix));
    orders.push_back(f.matrix.rows());
  }
  T total(0);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    T term = factors[i].weight * traces[i];
    for (std::size_t j = 0; j < factors.size(); ++j) {
      if (j != i) {
        term = term * from_count<T>(orders[j]);
      }
    }
    total = total + term;
  }
  return total;
}

/// tr(A (/) B) = n tr(A) + m tr(B).
template <Scalar T>
T trace_pair_closed_form(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require_square(a, "trace_pair_closed_form");
  detail::require_square(b, "trace_pair_closed_form");
  return from_count<T>(b.rows()) * trace(a) + from_count<T>(a.rows()) * trace(b);
}

/// tr(A^[k]) = k n^{k-1} tr(A).
template <Scalar T>
T trace_cartesian_power_closed_form(const Matrix<T>& a, std::size_t k) {
  detail::require_square(a, "trace_cartesian_power_closed_form");
  if (k == 0) {
    throw dimension_error("trace_cartesian_power_closed_form requires k >= 1");
  }
  T pow(1);
  for (std::size_t i = 1; i < k; ++i) {
    pow = pow * from_count<T>(a.rows());
  }
  return from_count<T>(k) * pow * trace(a);
}

/// tr((A+B) (/) (A-B)) = 2n tr(A), independent of B.
template <Scalar T>
T trace_plus_minus_closed_form(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require_same_shape(a, b, "trace_plus_minus_closed_form");
  detail::require_square(a, "trace_plus_minus_closed_form");
  return T(2) * from_count<T>(a.rows()) * trace(a);
}

/// tr(A (x) (B_1 (/) ... (/) B_k)) = n^{k-1} tr(A) sum_i tr(B_i),
/// for B_i all of equal order n.
template <Scalar T>
T trace_kron_with_cartesian_closed_form(const Matrix<T>& a,
                                        const std::vector<Matrix<T>>& bs) {
  detail::require_square(a, "trace_kron_with_cartesian_closed_form");
  if (bs.empty()) {
    throw dimension_error("trace_kron_with_cartesian_closed_form needs >= 1 B");
  }
  const std::size_t n = bs.front().rows();
  T sum(0);
  for (const auto& b : bs) {
    detail::require_square(b, "trace_kron_with_cartesian_closed_form");
    if (b.rows() != n) {
      throw dimension_error("all Cartesian factors must share one order");
    }
    sum = sum + trace(b);
  }
  T pow(1);
  for (std::size_t i = 1; i < bs.size(); ++i) {
    pow = pow * from_count<T>(n);
  }
  return pow * trace(a) * sum;
}

/// Consecutive groups of square factors; groups are combined by one product
/// while each group is collapsed by the other.
template <Scalar T>
using FactorGrouping = std::vector<std::vector<Matrix<T>>>;

namespace detail {

template <Scalar T>
void require_valid_grouping(const FactorGrouping<T>& groups, const char* op) {
  if (groups.empty()) {
    throw dimension_error(std::string(op) + " requires a non-empty grouping");
  }
  for (const auto& g : groups) {
    if (g.empty()) {
      throw dimension_error(std::string(op) + " forbids empty groups");
    }
    for (const auto& a : g) {
      require_square(a, op);
    }
  }
}

}  // namespace detail

/// tr((A_1 (/) ... ) (x) (A_{l+1} (/) ...) (x) ...) =
///   prod_groups [ sum_{i in g} tr(A_i) prod_{j in g, j != i} n_j ].
template <Scalar T>
T trace_kron_of_cartesian_groups(const FactorGrouping<T>& groups) {
  detail::require_valid_grouping(groups, "trace_kron_of_cartesian_groups");
  T total(1);
  for (const auto& g : groups) {
    T group_sum(0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      T term = trace(g[i]);
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (j != i) {
          term = term * from_count<T>(g[j].rows());
        }
      }
      group_sum = group_sum + term;
    }
    total = total * group_sum;
  }
  return total;
}

/// tr((A_1 (x) ... ) (/) (A_{l+1} (x) ...) (/) ...) =
///   sum_groups [ prod_{i in g} tr(A_i) * prod_{p outside g} n_p ].
template <Scalar T>
T trace_cartesian_of_kron_groups(const FactorGrouping<T>& groups) {
  detail::require_valid_grouping(groups, "trace_cartesian_of_kron_groups");
  T total(0);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    T term(1);
    for (const auto& a : groups[gi]) {
      term = term * trace(a);
    }
    for (std::size_t gj = 0; gj < groups.size(); ++gj) {
      if (gj != gi) {
        for (const auto& a : groups[gj]) {
          term = term * from_count<T>(a.rows());
        }
      }
    }
    total = total + term;
  }
  return total;
}

/// S_{A (/) B} = n^2 S_A + m^2 S_B.
template <Scalar T>
T entry_sum_cartesian_closed_form(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require_square(a, "entry_sum_cartesian_closed_form");
  detail::require_square(b, "entry_sum_cartesian_closed_form");
  const T m = from_count<T>(a.rows());
  const T n = from_count<T>(b.rows());
  return n * n * entry_sum(a) + m * m * entry_sum(b);
}

// ---------------------------------------------------------------------------
// Residual checkers: each returns LHS - RHS of an identity, which the
// identity asserts to be the zero matrix.
// ---------------------------------------------------------------------------

/// (A (/) B)(C (/) D) - [n (AC (/) BD) + AJ (x) JD + JC (x) BJ], all of
/// order n. This is what expanding the left side with the mixed-product
/// rule gives: the J J inner products contribute the factor n, and the
/// cross terms pair A with D and C with B.
template <Scalar T>
Matrix<T> product_identity_residual(const Matrix<T>& a, const Matrix<T>& b,
                                    const Matrix<T>& c, const Matrix<T>& d) {
  detail::require_square(a, "product_identity_residual");
  detail::require_same_shape(a, b, "product_identity_residual");
  detail::require_same_shape(a, c, "product_identity_residual");
  detail::require_same_shape(a, d, "product_identity_residual");
  const std::size_t n = a.rows();
  const Matrix<T> j = ones<T>(n, n);
  const Matrix<T> lhs = matmul(cartesian(a, b), cartesian(c, d));
  const Matrix<T> rhs =
      add(add(scale(from_count<T>(n), cartesian(matmul(a, c), matmul(b, d))),
              kron(matmul(a, j), matmul(j, d))),
          kron(matmul(j, c), matmul(b, j)));
  return sub(lhs, rhs);
}

/// (A (/) B) o (C (/) D) - [(A o C) (/) (B o D) + A (x) D + C (x) B].
template <Scalar T>
Matrix<T> hadamard_identity_residual(const Matrix<T>& a, const Matrix<T>& b,
                                     const Matrix<T>& c, const Matrix<T>& d) {
  detail::require_square(a, "hadamard_identity_residual");
  detail::require_same_shape(a, b, "hadamard_identity_residual");
  detail::require_same_shape(a, c, "hadamard_identity_residual");
  detail::require_same_shape(a, d, "hadamard_identity_residual");
  const Matrix<T> lhs = hadamard(cartesian(a, b), cartesian(c, d));
  const Matrix<T> rhs = add(
      add(cartesian(hadamard(a, c), hadamard(b, d)), kron(a, d)), kron(c, b));
  return sub(lhs, rhs);
}

/// Doubled residuals of the two distributivity identities, with A, B of
/// order m and C of order n:
///   2 (A+B) (/) C - [A (/) C + B (/) C + (A+B) (x) J_n]
///   2 C (/) (A+B) - [C (/) A + C (/) B + J_n (x) (A+B)]
/// Doubling keeps the 1/2 of the statement out of the exact ring.
template <Scalar T>
std::pair<Matrix<T>, Matrix<T>> distributivity_residuals(const Matrix<T>& a,
                                                         const Matrix<T>& b,
                                                         const Matrix<T>& c) {
  detail::require_same_shape(a, b, "distributivity_residuals");
  detail::require_square(a, "distributivity_residuals");
  detail::require_square(c, "distributivity_residuals");
  const Matrix<T> sum_ab = add(a, b);
  const Matrix<T> jn = ones<T>(c.rows(), c.rows());
  Matrix<T> first = sub(scale(T(2), cartesian(sum_ab, c)),
                        add(add(cartesian(a, c), cartesian(b, c)),
                            kron(sum_ab, jn)));
  Matrix<T> second = sub(scale(T(2), cartesian(c, sum_ab)),
                         add(add(cartesian(c, a), cartesian(c, b)),
                             kron(jn, sum_ab)));
  return {std::move(first), std::move(second)};
}

/// (sum_i A_i) (/) (sum_i B_i) (/) ... - sum_i (A_i (/) B_i (/) ...).
/// `terms[i]` holds the i-th term's factors, one per Cartesian slot; slot j
/// must carry one fixed order across all terms.
template <Scalar T>
Matrix<T> sum_cartesian_residual(const FactorGrouping<T>& terms) {
  detail::require_valid_grouping(terms, "sum_cartesian_residual");
  const std::size_t slots = terms.front().size();
  for (const auto& term : terms) {
    if (term.size() != slots) {
      throw dimension_error("sum_cartesian_residual: ragged term list");
    }
    for (std::size_t s = 0; s < slots; ++s) {
      if (term[s].rows() != terms.front()[s].rows()) {
        throw dimension_error("sum_cartesian_residual: slot orders differ");
      }
    }
  }
  std::vector<Matrix<T>> slot_sums;
  slot_sums.reserve(slots);
  for (std::size_t s = 0; s < slots; ++s) {
    Matrix<T> acc = terms.front()[s];
    for (std::size_t i = 1; i < terms.size(); ++i) {
      acc = add(acc, terms[i][s]);
    }
    slot_sums.push_back(std::move(acc));
  }
  Matrix<T> lhs = cartesian_chain(slot_sums);
  Matrix<T> rhs = cartesian_chain(terms.front());
  for (std::size_t i = 1; i < terms.size(); ++i) {
    rhs = add(rhs, cartesian_chain(terms[i]));
  }
  return sub(lhs, rhs);
}

template <Scalar T>
Matrix<T> sum_cartesian_residual(
    const std::vector<std::pair<Matrix<T>, Matrix<T>>>& pairs) {
  FactorGrouping<T> terms;
  terms.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    terms.push_back({a, b});
  }
  return sum_cartesian_residual(terms);
}

// ---------------------------------------------------------------------------
// Constructive inverses
// ---------------------------------------------------------------------------

/// Canonical factorization M = A (/) B with b_{0,0} = 0, when one exists.
/// Factorizations form a one-parameter shift family, so pinning b_{0,0}
/// makes the result unique. Returns nothing when M is not a Cartesian
/// product for the given split.
template <Scalar T>
std::optional<std::pair<Matrix<T>, Matrix<T>>> cartesian_factorize(
    const Matrix<T>& m, Dims d, double tol = 0.0) {
  detail::require_square(m, "cartesian_factorize");
  if (d.m == 0 || d.n == 0 || d.m * d.n != m.rows()) {
    throw dimension_error("cartesian_factorize: order is not m*n");
  }
  Matrix<T> a(d.m, d.m);
  for (std::size_t i = 0; i < d.m; ++i) {
    for (std::size_t j = 0; j < d.m; ++j) {
      a(i, j) = m(i * d.n, j * d.n);
    }
  }
  Matrix<T> b(d.n, d.n);
  for (std::size_t p = 0; p < d.n; ++p) {
    for (std::size_t q = 0; q < d.n; ++q) {
      b(p, q) = m(p, q) - a(0, 0);
    }
  }
  for (std::size_t i = 0; i < d.m; ++i) {
    for (std::size_t j = 0; j < d.m; ++j) {
      for (std::size_t p = 0; p < d.n; ++p) {
        for (std::size_t q = 0; q < d.n; ++q) {
          if (!approx_equal(m(i * d.n + p, j * d.n + q), a(i, j) + b(p, q),
                            tol)) {
            return std::nullopt;
          }
        }
      }
    }
  }
  return std::make_pair(std::move(a), std::move(b));
}

/// The shift k with C = A - kJ and D = B + kJ, which holds exactly when
/// A (/) B = C (/) D. Returns nothing when the products differ.
template <Scalar T>
std::optional<T> equality_shift(const Matrix<T>& a, const Matrix<T>& b,
                                const Matrix<T>& c, const Matrix<T>& d,
                                double tol = 0.0) {
  detail::require_square(a, "equality_shift");
  detail::require_square(b, "equality_shift");
  detail::require_same_shape(a, c, "equality_shift");
  detail::require_same_shape(b, d, "equality_shift");
  const T k = a(0, 0) - c(0, 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!approx_equal(c(i, j), a(i, j) - k, tol)) {
        return std::nullopt;
      }
    }
  }
  for (std::size_t p = 0; p < b.rows(); ++p) {
    for (std::size_t q = 0; q < b.cols(); ++q) {
      if (!approx_equal(d(p, q), b(p, q) + k, tol)) {
        return std::nullopt;
      }
    }
  }
  return k;
}

/// The shift k = (S_B - S_A) / n^2 with B = A + kJ, which holds exactly
/// when A (/) B = B (/) A. Returns nothing when the products differ.
template <Scalar T>
std::optional<T> commutation_shift(const Matrix<T>& a, const Matrix<T>& b,
                                   double tol = 0.0) {
  detail::require_same_shape(a, b, "commutation_shift");
  detail::require_square(a, "commutation_shift");
  const std::size_t n = a.rows();
  const T diff = entry_sum(b) - entry_sum(a);
  T k(0);
  if constexpr (is_exact_scalar_v<T>) {
    const auto q = exact_div(diff, static_cast<std::int64_t>(n * n));
    if (!q) {
      return std::nullopt;
    }
    k = *q;
  } else {
    k = diff * (T(1) / from_count<T>(n * n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!approx_equal(b(i, j), a(i, j) + k, tol)) {
        return std::nullopt;
      }
    }
  }
  return k;
}

/// The constant k with A = kJ_m and B = -kJ_n; when it exists A (/) B is
/// the zero matrix, and for m, n >= 2 its existence is equivalent to
/// A (/) B being diagonal.
template <Scalar T>
std::optional<T> diagonal_witness(const Matrix<T>& a, const Matrix<T>& b,
                                  double tol = 0.0) {
  detail::require_square(a, "diagonal_witness");
  detail::require_square(b, "diagonal_witness");
  const T k = a(0, 0);
  if (is_constant(a, k, tol) && is_constant(b, -k, tol)) {
    return k;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Structure predicates on A, B and A (/) B
// ---------------------------------------------------------------------------

enum class StructureKind { symmetric, skew };

/// (pred(A), pred(B), pred(A (/) B)) for symmetry or skew-symmetry.
/// Approximate scalars compare with tolerance 1e-12 * max |entry|.
template <Scalar T>
std::array<bool, 3> structure_check(const Matrix<T>& a, const Matrix<T>& b,
                                    StructureKind kind) {
  detail::require_square(a, "structure_check");
  detail::require_square(b, "structure_check");
  const Matrix<T> prod = cartesian(a, b);
  double tol = 0.0;
  if constexpr (!is_exact_scalar_v<T>) {
    tol = 1e-12 * std::max({max_abs_value(a), max_abs_value(b),
                            max_abs_value(prod), 1.0});
  }
  const auto pred = [&](const Matrix<T>& m) {
    return kind == StructureKind::symmetric ? is_symmetric(m, tol)
                                            : is_skew_symmetric(m, tol);
  };
  return {pred(a), pred(b), pred(prod)};
}

namespace detail {

template <Scalar T>
std::optional<T> constant_row_sum(const Matrix<T>& m, double tol) {
  const auto sums = row_sums(m);
  for (const auto& s : sums) {
    if (!approx_equal(s, sums.front(), tol)) {
      return std::nullopt;
    }
  }
  return sums.front();
}

}  // namespace detail

/// Constant row sums of A, B and A (/) B, each absent when the row sums
/// vary. When the first two are present the third equals n A_row + m B_row.
template <Scalar T>
std::array<std::optional<T>, 3> constant_row_sum_check(const Matrix<T>& a,
                                                       const Matrix<T>& b,
                                                       double tol = 0.0) {
  detail::require_square(a, "constant_row_sum_check");
  detail::require_square(b, "constant_row_sum_check");
  const Matrix<T> prod = cartesian(a, b);
  return {detail::constant_row_sum(a, tol), detail::constant_row_sum(b, tol),
          detail::constant_row_sum(prod, tol)};
}

/// Whether the all-ones vector is an eigenvector of A, B and A (/) B; a
/// restatement of the constant-row-sum characterization.
template <Scalar T>
std::array<bool, 3> all_ones_eigenvector_check(const Matrix<T>& a,
                                               const Matrix<T>& b,
                                               double tol = 0.0) {
  const auto sums = constant_row_sum_check(a, b, tol);
  return {sums[0].has_value(), sums[1].has_value(), sums[2].has_value()};
}

}  // namespace cartprod
