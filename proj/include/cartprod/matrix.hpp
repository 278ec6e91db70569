#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <span>
#include <type_traits>
#include <vector>

#include "cartprod/errors.hpp"
#include "cartprod/gauss_int.hpp"

namespace cartprod {

// ---------------------------------------------------------------------------
// Scalar traits
// ---------------------------------------------------------------------------

template <class T>
struct is_complex : std::false_type {};
template <class U>
struct is_complex<std::complex<U>> : std::true_type {};
template <class T>
inline constexpr bool is_complex_v = is_complex<T>::value;

/// Exact scalars compare with == and never round; approximate scalars
/// compare through a caller-supplied tolerance.
template <class T>
inline constexpr bool is_exact_scalar_v = std::is_same_v<T, GaussInt>;

template <class T>
concept Scalar = requires(T a, T b) {
  T(0);
  T(1);
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
};

inline double abs_value(double v) { return std::fabs(v); }
inline double abs_value(const std::complex<double>& v) { return std::abs(v); }

template <Scalar T>
T conj_of(const T& v) {
  if constexpr (is_complex_v<T>) {
    return std::conj(v);
  } else if constexpr (std::is_floating_point_v<T>) {
    return v;
  } else {
    return v.conj();
  }
}

/// Dimension counts (m, n) as scalars of the working ring.
template <Scalar T>
T from_count(std::size_t n) {
  if constexpr (is_exact_scalar_v<T>) {
    return T(static_cast<std::int64_t>(n));
  } else {
    return T(static_cast<double>(n));
  }
}

template <Scalar T>
bool approx_equal(const T& a, const T& b, double tol = 0.0) {
  if constexpr (is_exact_scalar_v<T>) {
    (void)tol;
    return a == b;
  } else {
    return abs_value(a - b) <= tol;
  }
}

// ---------------------------------------------------------------------------
// Capacity guard
// ---------------------------------------------------------------------------

/// Entry-count cap for any produced matrix. Kronecker/Cartesian chains grow
/// multiplicatively, so oversized requests fail before allocation. The
/// CARTPROD_CAPACITY environment variable overrides the default of 2^24.
inline std::size_t entry_capacity() {
  if (const char* s = std::getenv("CARTPROD_CAPACITY")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) {
      return static_cast<std::size_t>(v);
    }
  }
  return std::size_t{1} << 24;
}

inline void check_capacity(std::size_t rows, std::size_t cols) {
  const std::size_t cap = entry_capacity();
  if (rows != 0 && cols > cap / rows) {
    throw capacity_error("result would have " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " entries, cap is " +
                         std::to_string(cap));
  }
}

/// Product of two orders, guarded against overflow and the entry cap.
inline std::size_t checked_order_mul(std::size_t a, std::size_t b) {
  std::size_t r;
  if (__builtin_mul_overflow(a, b, &r) || r > entry_capacity()) {
    throw capacity_error("matrix order " + std::to_string(a) + "*" +
                         std::to_string(b) + " exceeds the entry cap");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Matrix
// ---------------------------------------------------------------------------

/// Dense row-major rectangular matrix over an exact or approximate scalar.
template <Scalar T>
class Matrix {
 public:
  using value_type = T;

  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0) {
      throw dimension_error("matrix dimensions must be positive");
    }
    check_capacity(rows, cols);
    entries_.assign(rows * cols, fill);
  }

  Matrix(std::initializer_list<std::initializer_list<T>> init)
      : Matrix(init.size(), init.size() ? init.begin()->size() : 0) {
    std::size_t i = 0;
    for (const auto& row : init) {
      if (row.size() != cols_) {
        throw dimension_error("ragged initializer rows");
      }
      std::size_t j = 0;
      for (const auto& v : row) {
        (*this)(i, j++) = v;
      }
      ++i;
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return entries_.size(); }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return entries_[i * cols_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return entries_[i * cols_ + j];
  }

  std::span<const T> entries() const { return entries_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> entries_;
};

using ExactMatrix = Matrix<GaussInt>;
using ComplexMatrix = Matrix<std::complex<double>>;
using RealMatrix = Matrix<double>;

/// Order split (m, n) of a Cartesian or Kronecker product.
struct Dims {
  std::size_t m;
  std::size_t n;
};

namespace detail {

template <Scalar T>
void require_square(const Matrix<T>& a, const char* op) {
  if (!a.is_square()) {
    throw dimension_error(std::string(op) + " requires a square matrix, got " +
                          std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()));
  }
}

template <Scalar T>
void require_same_shape(const Matrix<T>& a, const Matrix<T>& b,
                        const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw dimension_error(std::string(op) + " requires equal shapes, got " +
                          std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " and " +
                          std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()));
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

template <Scalar T = GaussInt>
Matrix<T> ones(std::size_t rows, std::size_t cols) {
  return Matrix<T>(rows, cols, T(1));
}

template <Scalar T = GaussInt>
Matrix<T> zeros(std::size_t rows, std::size_t cols) {
  return Matrix<T>(rows, cols, T(0));
}

template <Scalar T = GaussInt>
Matrix<T> identity(std::size_t n) {
  Matrix<T> out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = T(1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Entrywise operations
// ---------------------------------------------------------------------------

template <Scalar T>
Matrix<T> add(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require_same_shape(a, b, "add");
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) = a(i, j) + b(i, j);
    }
  }
  return out;
}

template <Scalar T>
Matrix<T> sub(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require_same_shape(a, b, "sub");
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) = a(i, j) - b(i, j);
    }
  }
  return out;
}

template <Scalar T>
Matrix<T> scale(const T& c, const Matrix<T>& a) {
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) = c * a(i, j);
    }
  }
  return out;
}

template <Scalar T>
Matrix<T> negate(const Matrix<T>& a) {
  return scale(T(-1), a);
}

template <Scalar T>
Matrix<T> hadamard(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require_same_shape(a, b, "hadamard");
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) = a(i, j) * b(i, j);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Products
// ---------------------------------------------------------------------------

template <Scalar T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) {
    throw dimension_error("matmul requires cols(A) == rows(B), got " +
                          std::to_string(a.cols()) + " and " +
                          std::to_string(b.rows()));
  }
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = out(i, j) + aik * b(k, j);
      }
    }
  }
  return out;
}

/// Kronecker product: block (i, j) of the result is a(i, j) * B.
template <Scalar T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  const std::size_t r = checked_order_mul(a.rows(), b.rows());
  const std::size_t c = checked_order_mul(a.cols(), b.cols());
  Matrix<T> out(r, c);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T aij = a(i, j);
      for (std::size_t p = 0; p < b.rows(); ++p) {
        for (std::size_t q = 0; q < b.cols(); ++q) {
          out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
      }
    }
  }
  return out;
}

/// Cartesian product of square matrices: entry (p, q) of block (i, j) is
/// a(i, j) + b(p, q), i.e. A (x) J + J (x) B.
template <Scalar T>
Matrix<T> cartesian(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require_square(a, "cartesian");
  detail::require_square(b, "cartesian");
  const std::size_t m = a.rows();
  const std::size_t n = b.rows();
  const std::size_t order = checked_order_mul(m, n);
  Matrix<T> out(order, order);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const T aij = a(i, j);
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
          out(i * n + p, j * n + q) = aij + b(p, q);
        }
      }
    }
  }
  return out;
}

/// Left fold of the (associative) Cartesian product over two or more factors.
template <Scalar T>
Matrix<T> cartesian_chain(std::span<const Matrix<T>> factors) {
  if (factors.empty()) {
    throw dimension_error("cartesian_chain requires at least one factor");
  }
  Matrix<T> acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    acc = cartesian(acc, factors[i]);
  }
  return acc;
}

template <Scalar T>
Matrix<T> cartesian_chain(const std::vector<Matrix<T>>& factors) {
  return cartesian_chain(std::span<const Matrix<T>>(factors));
}

/// k-fold Cartesian power A [k] = A (/) A (/) ... (/) A.
template <Scalar T>
Matrix<T> cartesian_power(const Matrix<T>& a, std::size_t k) {
  detail::require_square(a, "cartesian_power");
  if (k == 0) {
    throw dimension_error("cartesian_power requires k >= 1");
  }
  // Fail before building intermediates when the final order busts the cap.
  std::size_t order = 1;
  for (std::size_t i = 0; i < k; ++i) {
    order = checked_order_mul(order, a.rows());
  }
  check_capacity(order, order);
  Matrix<T> acc = a;
  for (std::size_t i = 1; i < k; ++i) {
    acc = cartesian(acc, a);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Transposition and reductions
// ---------------------------------------------------------------------------

template <Scalar T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(j, i) = a(i, j);
    }
  }
  return out;
}

template <Scalar T>
Matrix<T> conj_transpose(const Matrix<T>& a) {
  Matrix<T> out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(j, i) = conj_of(a(i, j));
    }
  }
  return out;
}

template <Scalar T>
T trace(const Matrix<T>& a) {
  detail::require_square(a, "trace");
  T sum(0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    sum = sum + a(i, i);
  }
  return sum;
}

/// S_A: the sum of all entries.
template <Scalar T>
T entry_sum(const Matrix<T>& a) {
  T sum(0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      sum = sum + a(i, j);
    }
  }
  return sum;
}

/// A_i: the per-row entry sums.
template <Scalar T>
std::vector<T> row_sums(const Matrix<T>& a) {
  std::vector<T> sums(a.rows(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      sums[i] = sums[i] + a(i, j);
    }
  }
  return sums;
}

// ---------------------------------------------------------------------------
// Commutation matrix
// ---------------------------------------------------------------------------

/// The vec-permutation matrix P of order mn with P^T (A (x) B) P = B (x) A
/// for all A of order m and B of order n. The same P intertwines the
/// Cartesian product. Column p*m + i carries its 1 in row i*n + p, so that
/// conjugation rewrites an (i, p) index pair as (p, i).
template <Scalar T = GaussInt>
Matrix<T> commutation_matrix(Dims d) {
  if (d.m == 0 || d.n == 0) {
    throw dimension_error("commutation_matrix requires positive orders");
  }
  const std::size_t order = checked_order_mul(d.m, d.n);
  Matrix<T> out(order, order);
  for (std::size_t i = 0; i < d.m; ++i) {
    for (std::size_t p = 0; p < d.n; ++p) {
      out(i * d.n + p, p * d.m + i) = T(1);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Predicates and conversions
// ---------------------------------------------------------------------------

template <Scalar T>
bool matrices_equal(const Matrix<T>& a, const Matrix<T>& b, double tol = 0.0) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return false;
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!approx_equal(a(i, j), b(i, j), tol)) {
        return false;
      }
    }
  }
  return true;
}

template <Scalar T>
bool is_zero(const Matrix<T>& a, double tol = 0.0) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!approx_equal(a(i, j), T(0), tol)) {
        return false;
      }
    }
  }
  return true;
}

template <Scalar T>
bool is_symmetric(const Matrix<T>& a, double tol = 0.0) {
  if (!a.is_square()) {
    return false;
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      if (!approx_equal(a(i, j), a(j, i), tol)) {
        return false;
      }
    }
  }
  return true;
}

template <Scalar T>
bool is_skew_symmetric(const Matrix<T>& a, double tol = 0.0) {
  if (!a.is_square()) {
    return false;
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i; j < a.cols(); ++j) {
      if (!approx_equal(a(i, j), -a(j, i), tol)) {
        return false;
      }
    }
  }
  return true;
}

template <Scalar T>
bool is_diagonal(const Matrix<T>& a, double tol = 0.0) {
  if (!a.is_square()) {
    return false;
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j && !approx_equal(a(i, j), T(0), tol)) {
        return false;
      }
    }
  }
  return true;
}

/// Every entry equal to the given constant (A = c * J).
template <Scalar T>
bool is_constant(const Matrix<T>& a, const T& c, double tol = 0.0) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!approx_equal(a(i, j), c, tol)) {
        return false;
      }
    }
  }
  return true;
}

template <Scalar T>
double max_abs_value(const Matrix<T>& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      m = std::max(m, abs_value(a(i, j)));
    }
  }
  return m;
}

inline RealMatrix to_real(const ExactMatrix& a) {
  RealMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).im() != 0) {
        throw dimension_error("matrix has nonzero imaginary parts");
      }
      out(i, j) = static_cast<double>(a(i, j).re());
    }
  }
  return out;
}

inline RealMatrix to_real(const ComplexMatrix& a, double imag_tol = 0.0) {
  RealMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (std::fabs(a(i, j).imag()) > imag_tol) {
        throw dimension_error("matrix has nonzero imaginary parts");
      }
      out(i, j) = a(i, j).real();
    }
  }
  return out;
}

inline ComplexMatrix to_complex(const ExactMatrix& a) {
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) = {static_cast<double>(a(i, j).re()),
                   static_cast<double>(a(i, j).im())};
    }
  }
  return out;
}

// Operator sugar mirroring the free functions.
template <Scalar T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  return add(a, b);
}
template <Scalar T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  return sub(a, b);
}
template <Scalar T>
Matrix<T> operator-(const Matrix<T>& a) {
  return negate(a);
}
template <Scalar T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  return matmul(a, b);
}
template <Scalar T>
Matrix<T> operator*(const T& c, const Matrix<T>& a) {
  return scale(c, a);
}

}  // namespace cartprod
