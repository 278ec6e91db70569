#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "cartprod/graph.hpp"
#include "cartprod/matrix.hpp"

namespace cartprod {

/// Eigenvalue signs of a symmetric matrix: (n_+, n_0, n_-).
struct InertiaTriple {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;

  std::size_t order() const { return positive + zero + negative; }
  friend bool operator==(const InertiaTriple&, const InertiaTriple&) = default;
};

struct SpectrumResult {
  std::vector<double> eigenvalues;  // sorted descending
  double off_diag_norm = 0.0;       // residual at convergence
  std::size_t sweeps = 0;
};

namespace detail {

inline double off_diagonal_frobenius(const std::vector<double>& a,
                                     std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) {
        sum += a[i * n + j] * a[i * n + j];
      }
    }
  }
  return std::sqrt(sum);
}

}  // namespace detail

/// Cyclic Jacobi eigensolver for real symmetric matrices. Sweeps rotate
/// away every off-diagonal pair until the off-diagonal Frobenius norm
/// drops to tol * max(1, ||M||_F). Unconditionally convergent, plenty
/// fast at the orders this library targets.
inline SpectrumResult jacobi_eigenvalues(const RealMatrix& m,
                                         double tol = 1e-12) {
  detail::require_square(m, "jacobi_eigenvalues");
  if (!(tol > 0.0)) {
    throw std::invalid_argument("jacobi_eigenvalues requires tol > 0");
  }
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::fabs(m(i, j) - m(j, i)) > 1e-12) {
        throw symmetry_error("jacobi_eigenvalues requires a symmetric matrix");
      }
    }
  }

  std::vector<double> a(n * n);
  double fro = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = m(i, j);
      fro += m(i, j) * m(i, j);
    }
  }
  const double threshold = tol * std::max(1.0, std::sqrt(fro));

  constexpr std::size_t kSweepCap = 100;
  SpectrumResult result;
  for (std::size_t sweep = 0;; ++sweep) {
    result.off_diag_norm = detail::off_diagonal_frobenius(a, n);
    result.sweeps = sweep;
    if (result.off_diag_norm <= threshold) {
      break;
    }
    if (sweep == kSweepCap) {
      throw convergence_error("jacobi_eigenvalues: no convergence after " +
                              std::to_string(kSweepCap) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) {
          continue;
        }
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t =
            (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::hypot(1.0, theta));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
      }
    }
  }

  result.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    result.eigenvalues[i] = a[i * n + i];
  }
  std::sort(result.eigenvalues.begin(), result.eigenvalues.end(),
            std::greater<>());
  return result;
}

inline SpectrumResult jacobi_eigenvalues(const ExactMatrix& m,
                                         double tol = 1e-12) {
  return jacobi_eigenvalues(to_real(m), tol);
}

/// Eigenvalues within zero_tol of 0 count as zero.
inline InertiaTriple inertia(const RealMatrix& m, double zero_tol) {
  const SpectrumResult spectrum = jacobi_eigenvalues(m);
  InertiaTriple triple;
  for (double lambda : spectrum.eigenvalues) {
    if (lambda > zero_tol) {
      ++triple.positive;
    } else if (lambda < -zero_tol) {
      ++triple.negative;
    } else {
      ++triple.zero;
    }
  }
  return triple;
}

/// Residuals scale with the matrix norm, so the default zero threshold is
/// 1e-7 * order * max |entry|.
inline double default_zero_tol(const RealMatrix& m) {
  return 1e-7 * static_cast<double>(m.rows()) * max_abs_value(m);
}

inline InertiaTriple inertia(const RealMatrix& m) {
  return inertia(m, default_zero_tol(m));
}

inline InertiaTriple inertia(const ExactMatrix& m) {
  return inertia(to_real(m));
}

inline InertiaTriple inertia(const ExactMatrix& m, double zero_tol) {
  return inertia(to_real(m), zero_tol);
}

// ---------------------------------------------------------------------------
// Distance spectra
// ---------------------------------------------------------------------------

/// Largest eigenvalue of D(G); equals the spectral radius because the
/// distance matrix is nonnegative and symmetric.
inline double distance_spectral_radius(const Graph& g) {
  return jacobi_eigenvalues(distance_matrix(g)).eigenvalues.front();
}

/// (n/m) W(G1) + (m/n) W(G2): the stated lower bound for the distance
/// spectral radius of G1 [] G2.
inline double spectral_radius_lower_bound(const Graph& g1, const Graph& g2) {
  const auto m = static_cast<double>(g1.vertex_count());
  const auto n = static_cast<double>(g2.vertex_count());
  return (n / m) * static_cast<double>(wiener_index(g1)) +
         (m / n) * static_cast<double>(wiener_index(g2));
}

/// 2(n/m) W(G1) + 2(m/n) W(G2): the constant row sum of D(G1 [] G2) when
/// both factors are transmission regular (S = 2W), and a valid lower bound
/// in general. Twice spectral_radius_lower_bound.
inline double spectral_radius_row_sum_bound(const Graph& g1, const Graph& g2) {
  return 2.0 * spectral_radius_lower_bound(g1, g2);
}

/// Inertia of D(G [] H) next to the prediction built from the one-point
/// identification G u * H v: (n_+, (m-1)(n-1) + n_0, n_-).
inline std::pair<InertiaTriple, InertiaTriple> inertia_product_check(
    const Graph& g, const Graph& h, std::size_t u, std::size_t v) {
  const InertiaTriple actual =
      inertia(distance_matrix(graph_cartesian_product(g, h)));
  const InertiaTriple glued =
      inertia(distance_matrix(vertex_identification(g, u, h, v)));
  const std::size_t m = g.vertex_count();
  const std::size_t n = h.vertex_count();
  const InertiaTriple predicted{glued.positive,
                                (m - 1) * (n - 1) + glued.zero,
                                glued.negative};
  return {actual, predicted};
}

/// Identification at the last vertex of each factor.
inline std::pair<InertiaTriple, InertiaTriple> inertia_product_check(
    const Graph& g, const Graph& h) {
  return inertia_product_check(g, h, g.vertex_count() - 1,
                               h.vertex_count() - 1);
}

}  // namespace cartprod
