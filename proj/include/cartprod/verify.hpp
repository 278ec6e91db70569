#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cartprod/identities.hpp"
#include "cartprod/io.hpp"
#include "cartprod/matrix.hpp"

namespace cartprod {

// ---------------------------------------------------------------------------
// Deterministic generator: every trial derives its stream from
// (seed, suite, trial index), so campaigns replay bit for bit and trials
// could run in any order.
// ---------------------------------------------------------------------------

class TrialRng {
 public:
  explicit TrialRng(std::uint64_t seed) : state_(seed) {}

  // splitmix64
  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi], inclusive.
  std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(next() % n);
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline TrialRng trial_rng(std::uint64_t seed, std::string_view suite,
                          std::uint64_t trial) {
  TrialRng mixer(seed ^ fnv1a(suite));
  return TrialRng(mixer.next() + trial * 0x9e3779b97f4a7c15ULL);
}

// ---------------------------------------------------------------------------
// Input generators. Components stay in [-9, 9]; the structured shapes may
// derive one entry outside that range to hit an exact row-sum or shift.
// ---------------------------------------------------------------------------

inline GaussInt random_gauss(TrialRng& rng) {
  return {rng.int_in(-9, 9), rng.int_in(-9, 9)};
}

inline std::size_t random_order(TrialRng& rng, std::size_t max_order) {
  return 1 + rng.index(max_order);
}

inline ExactMatrix random_matrix(TrialRng& rng, std::size_t order) {
  ExactMatrix m(order, order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      m(i, j) = random_gauss(rng);
    }
  }
  return m;
}

inline ExactMatrix random_symmetric_matrix(TrialRng& rng, std::size_t order) {
  ExactMatrix m(order, order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = i; j < order; ++j) {
      m(i, j) = random_gauss(rng);
      m(j, i) = m(i, j);
    }
  }
  return m;
}

inline ExactMatrix random_skew_matrix(TrialRng& rng, std::size_t order) {
  ExactMatrix m(order, order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = i + 1; j < order; ++j) {
      m(i, j) = random_gauss(rng);
      m(j, i) = -m(i, j);
    }
  }
  return m;
}

inline ExactMatrix constant_matrix(const GaussInt& k, std::size_t order) {
  return ExactMatrix(order, order, k);
}

/// Random matrix whose rows all sum to one random target.
inline ExactMatrix random_constant_row_sum_matrix(TrialRng& rng,
                                                  std::size_t order) {
  const GaussInt target = random_gauss(rng);
  ExactMatrix m(order, order);
  for (std::size_t i = 0; i < order; ++i) {
    GaussInt partial(0);
    for (std::size_t j = 0; j + 1 < order; ++j) {
      m(i, j) = random_gauss(rng);
      partial += m(i, j);
    }
    m(i, order - 1) = target - partial;
  }
  return m;
}

inline void perturb_random_entry(ExactMatrix& m, TrialRng& rng) {
  const std::size_t i = rng.index(m.rows());
  const std::size_t j = rng.index(m.cols());
  m(i, j) += GaussInt{1};
}

/// A special shape for structured trials of the plain identity suites.
inline ExactMatrix random_special_matrix(TrialRng& rng, std::size_t order) {
  switch (rng.index(4)) {
    case 0:
      return random_symmetric_matrix(rng, order);
    case 1:
      return random_skew_matrix(rng, order);
    case 2:
      return constant_matrix(random_gauss(rng), order);
    default:
      return random_constant_row_sum_matrix(rng, order);
  }
}

// ---------------------------------------------------------------------------
// Campaign plumbing
// ---------------------------------------------------------------------------

/// Structured trials build the special shape an iff-theorem talks about,
/// perturbed trials break that shape by one entry, plain trials sample
/// uniformly. Trial index t maps to structured (t % 4 == 0), perturbed
/// (t % 4 == 2) and plain (otherwise), giving the fixed 25% injection.
enum class TrialKind { plain, structured, perturbed };

inline TrialKind trial_kind(std::uint64_t trial) {
  if (trial % 4 == 0) {
    return TrialKind::structured;
  }
  return trial % 4 == 2 ? TrialKind::perturbed : TrialKind::plain;
}

struct VerifyReport {
  std::string suite;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::uint64_t seed = 0;
  std::vector<json> counterexamples;  // at most 5, ordered by trial index
};

inline json report_to_json(const VerifyReport& r) {
  return {{"suite", r.suite},
          {"trials", r.trials},
          {"failures", r.failures},
          {"seed", r.seed},
          {"counterexamples", r.counterexamples}};
}

using SuiteFn = std::function<std::optional<json>(TrialRng&, std::size_t,
                                                  TrialKind)>;

struct SuiteSpec {
  std::string name;
  SuiteFn fn;
};

namespace detail {

inline json failure(std::string detail, json inputs) {
  return {{"detail", std::move(detail)}, {"inputs", std::move(inputs)}};
}

inline json inputs_json(
    std::initializer_list<std::pair<const char*, const ExactMatrix*>> items) {
  json j = json::object();
  for (const auto& [name, m] : items) {
    j[name] = matrix_to_json(*m);
  }
  return j;
}

inline json scalar_json(const GaussInt& v) { return {v.re(), v.im()}; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Suites. Each one checks a closed form against a directly built product,
// or a residual/witness contract, and reports the offending inputs.
// ---------------------------------------------------------------------------

namespace suites {

using detail::failure;
using detail::inputs_json;
using detail::scalar_json;

inline ExactMatrix draw(TrialRng& rng, std::size_t order, TrialKind kind) {
  return kind == TrialKind::structured ? random_special_matrix(rng, order)
                                       : random_matrix(rng, order);
}

inline std::optional<json> trace_pair(TrialRng& rng, std::size_t max_order,
                                      TrialKind kind) {
  const ExactMatrix a = draw(rng, random_order(rng, max_order), kind);
  const ExactMatrix b = draw(rng, random_order(rng, max_order), kind);
  const GaussInt closed = trace_pair_closed_form(a, b);
  const GaussInt direct = trace(cartesian(a, b));
  if (closed != direct) {
    return failure("n tr(A) + m tr(B) != tr(A (/) B)",
                   inputs_json({{"a", &a}, {"b", &b}}));
  }
  return std::nullopt;
}

inline std::optional<json> trace_cartesian(TrialRng& rng,
                                           std::size_t max_order,
                                           TrialKind kind) {
  const std::size_t count = 1 + rng.index(3);
  std::vector<WeightedFactor<GaussInt>> factors;
  std::vector<ExactMatrix> scaled;
  json inputs = json::array();
  for (std::size_t i = 0; i < count; ++i) {
    const GaussInt k = random_gauss(rng);
    ExactMatrix a = draw(rng, random_order(rng, max_order), kind);
    scaled.push_back(scale(k, a));
    inputs.push_back({{"k", scalar_json(k)}, {"a", matrix_to_json(a)}});
    factors.push_back({k, std::move(a)});
  }
  const GaussInt closed = trace_cartesian_closed_form(factors);
  const GaussInt direct = trace(cartesian_chain(scaled));
  if (closed != direct) {
    return failure("weighted trace closed form != direct chain trace",
                   {{"factors", std::move(inputs)}});
  }
  return std::nullopt;
}

inline std::optional<json> trace_power(TrialRng& rng, std::size_t max_order,
                                       TrialKind kind) {
  const ExactMatrix a = draw(rng, random_order(rng, max_order), kind);
  const auto k = static_cast<std::size_t>(rng.int_in(1, 3));
  const GaussInt closed = trace_cartesian_power_closed_form(a, k);
  const GaussInt direct = trace(cartesian_power(a, k));
  if (closed != direct) {
    return failure("k n^{k-1} tr(A) != tr(A^[k]) for k=" + std::to_string(k),
                   inputs_json({{"a", &a}}));
  }
  return std::nullopt;
}

inline std::optional<json> trace_plus_minus(TrialRng& rng,
                                            std::size_t max_order,
                                            TrialKind kind) {
  const std::size_t n = random_order(rng, max_order);
  const ExactMatrix a = draw(rng, n, kind);
  const ExactMatrix b = draw(rng, n, kind);
  const GaussInt closed = trace_plus_minus_closed_form(a, b);
  const GaussInt direct = trace(cartesian(add(a, b), sub(a, b)));
  if (closed != direct) {
    return failure("2n tr(A) != tr((A+B) (/) (A-B))",
                   inputs_json({{"a", &a}, {"b", &b}}));
  }
  return std::nullopt;
}

inline std::optional<json> trace_kron_cartesian(TrialRng& rng,
                                                std::size_t max_order,
                                                TrialKind kind) {
  const ExactMatrix a = draw(rng, random_order(rng, max_order), kind);
  const std::size_t n = random_order(rng, max_order);
  const std::size_t count = 1 + rng.index(3);
  std::vector<ExactMatrix> bs;
  for (std::size_t i = 0; i < count; ++i) {
    bs.push_back(draw(rng, n, kind));
  }
  const GaussInt closed = trace_kron_with_cartesian_closed_form(a, bs);
  const GaussInt direct = trace(kron(a, cartesian_chain(bs)));
  if (closed != direct) {
    json inputs = inputs_json({{"a", &a}});
    for (std::size_t i = 0; i < bs.size(); ++i) {
      inputs["b" + std::to_string(i)] = matrix_to_json(bs[i]);
    }
    return failure("n^{k-1} tr(A) sum tr(B_i) != tr(A (x) chain)",
                   std::move(inputs));
  }
  return std::nullopt;
}

inline FactorGrouping<GaussInt> random_grouping(TrialRng& rng,
                                                std::size_t max_order,
                                                TrialKind kind) {
  const std::size_t groups = 1 + rng.index(3);
  FactorGrouping<GaussInt> g(groups);
  for (auto& group : g) {
    const std::size_t len = 1 + rng.index(2);
    for (std::size_t i = 0; i < len; ++i) {
      group.push_back(draw(rng, random_order(rng, max_order), kind));
    }
  }
  return g;
}

inline json grouping_json(const FactorGrouping<GaussInt>& g) {
  json out = json::array();
  for (const auto& group : g) {
    json inner = json::array();
    for (const auto& a : group) {
      inner.push_back(matrix_to_json(a));
    }
    out.push_back(std::move(inner));
  }
  return out;
}

inline std::optional<json> trace_kron_of_cartesian_groups_suite(
    TrialRng& rng, std::size_t max_order, TrialKind kind) {
  const FactorGrouping<GaussInt> g = random_grouping(rng, max_order, kind);
  ExactMatrix direct = cartesian_chain(g.front());
  for (std::size_t i = 1; i < g.size(); ++i) {
    direct = kron(direct, cartesian_chain(g[i]));
  }
  if (trace_kron_of_cartesian_groups(g) != trace(direct)) {
    return failure("kron-of-cartesian trace closed form mismatch",
                   {{"groups", grouping_json(g)}});
  }
  return std::nullopt;
}

inline std::optional<json> trace_cartesian_of_kron_groups_suite(
    TrialRng& rng, std::size_t max_order, TrialKind kind) {
  const FactorGrouping<GaussInt> g = random_grouping(rng, max_order, kind);
  std::vector<ExactMatrix> collapsed;
  for (const auto& group : g) {
    ExactMatrix acc = group.front();
    for (std::size_t i = 1; i < group.size(); ++i) {
      acc = kron(acc, group[i]);
    }
    collapsed.push_back(std::move(acc));
  }
  if (trace_cartesian_of_kron_groups(g) != trace(cartesian_chain(collapsed))) {
    return failure("cartesian-of-kron trace closed form mismatch",
                   {{"groups", grouping_json(g)}});
  }
  return std::nullopt;
}

inline std::optional<json> product_identity(TrialRng& rng,
                                            std::size_t max_order,
                                            TrialKind kind) {
  const std::size_t n = random_order(rng, max_order);
  const ExactMatrix a = draw(rng, n, kind);
  const ExactMatrix b = draw(rng, n, kind);
  const ExactMatrix c = draw(rng, n, kind);
  const ExactMatrix d = draw(rng, n, kind);
  if (!is_zero(product_identity_residual(a, b, c, d))) {
    return failure("(A(/)B)(C(/)D) product identity residual nonzero",
                   inputs_json({{"a", &a}, {"b", &b}, {"c", &c}, {"d", &d}}));
  }
  return std::nullopt;
}

inline std::optional<json> hadamard_identity(TrialRng& rng,
                                             std::size_t max_order,
                                             TrialKind kind) {
  const std::size_t n = random_order(rng, max_order);
  const ExactMatrix a = draw(rng, n, kind);
  const ExactMatrix b = draw(rng, n, kind);
  const ExactMatrix c = draw(rng, n, kind);
  const ExactMatrix d = draw(rng, n, kind);
  if (!is_zero(hadamard_identity_residual(a, b, c, d))) {
    return failure("(A(/)B) o (C(/)D) Hadamard identity residual nonzero",
                   inputs_json({{"a", &a}, {"b", &b}, {"c", &c}, {"d", &d}}));
  }
  return std::nullopt;
}

inline std::optional<json> distributivity(TrialRng& rng, std::size_t max_order,
                                          TrialKind kind) {
  const std::size_t m = random_order(rng, max_order);
  const ExactMatrix a = draw(rng, m, kind);
  const ExactMatrix b = draw(rng, m, kind);
  const ExactMatrix c = draw(rng, random_order(rng, max_order), kind);
  const auto [first, second] = distributivity_residuals(a, b, c);
  if (!is_zero(first) || !is_zero(second)) {
    return failure("distributivity residual nonzero",
                   inputs_json({{"a", &a}, {"b", &b}, {"c", &c}}));
  }
  return std::nullopt;
}

inline std::optional<json> sum_cartesian(TrialRng& rng, std::size_t max_order,
                                         TrialKind kind) {
  const std::size_t slots = 2 + rng.index(2);
  const std::size_t terms = 1 + rng.index(3);
  std::vector<std::size_t> orders;
  for (std::size_t s = 0; s < slots; ++s) {
    orders.push_back(random_order(rng, max_order));
  }
  FactorGrouping<GaussInt> grouping(terms);
  for (auto& term : grouping) {
    for (std::size_t s = 0; s < slots; ++s) {
      term.push_back(draw(rng, orders[s], kind));
    }
  }
  if (!is_zero(sum_cartesian_residual(grouping))) {
    return failure("(sum A_i) (/) ... != sum (A_i (/) ...)",
                   {{"terms", grouping_json(grouping)}});
  }
  return std::nullopt;
}

inline std::optional<json> entry_sum_kron(TrialRng& rng, std::size_t max_order,
                                          TrialKind kind) {
  const ExactMatrix a = draw(rng, random_order(rng, max_order), kind);
  const ExactMatrix b = draw(rng, random_order(rng, max_order), kind);
  if (entry_sum(kron(a, b)) != entry_sum(a) * entry_sum(b)) {
    return failure("S_{A (x) B} != S_A S_B",
                   inputs_json({{"a", &a}, {"b", &b}}));
  }
  return std::nullopt;
}

inline std::optional<json> entry_sum_cartesian(TrialRng& rng,
                                               std::size_t max_order,
                                               TrialKind kind) {
  const ExactMatrix a = draw(rng, random_order(rng, max_order), kind);
  const ExactMatrix b = draw(rng, random_order(rng, max_order), kind);
  if (entry_sum_cartesian_closed_form(a, b) != entry_sum(cartesian(a, b))) {
    return failure("n^2 S_A + m^2 S_B != S_{A (/) B}",
                   inputs_json({{"a", &a}, {"b", &b}}));
  }
  return std::nullopt;
}

inline std::optional<json> transpose_conjugate(TrialRng& rng,
                                               std::size_t max_order,
                                               TrialKind kind) {
  const ExactMatrix a = draw(rng, random_order(rng, max_order), kind);
  const ExactMatrix b = draw(rng, random_order(rng, max_order), kind);
  const ExactMatrix c = draw(rng, random_order(rng, max_order), kind);
  const auto inputs = [&] {
    return inputs_json({{"a", &a}, {"b", &b}, {"c", &c}});
  };
  if (transpose(kron(a, b)) != kron(transpose(a), transpose(b))) {
    return failure("(A (x) B)^T != A^T (x) B^T", inputs());
  }
  if (conj_transpose(kron(a, b)) !=
      kron(conj_transpose(a), conj_transpose(b))) {
    return failure("(A (x) B)^* != A^* (x) B^*", inputs());
  }
  if (transpose(cartesian(a, b)) != cartesian(transpose(a), transpose(b))) {
    return failure("(A (/) B)^T != A^T (/) B^T", inputs());
  }
  if (conj_transpose(cartesian(a, b)) !=
      cartesian(conj_transpose(a), conj_transpose(b))) {
    return failure("(A (/) B)^* != A^* (/) B^*", inputs());
  }
  const std::vector<ExactMatrix> chain{a, b, c};
  const std::vector<ExactMatrix> chain_t{transpose(a), transpose(b),
                                         transpose(c)};
  const std::vector<ExactMatrix> chain_h{conj_transpose(a), conj_transpose(b),
                                         conj_transpose(c)};
  if (transpose(cartesian_chain(chain)) != cartesian_chain(chain_t)) {
    return failure("n-fold transpose corollary fails", inputs());
  }
  if (conj_transpose(cartesian_chain(chain)) != cartesian_chain(chain_h)) {
    return failure("n-fold conjugate corollary fails", inputs());
  }
  return std::nullopt;
}

inline std::optional<json> permutation_similarity(TrialRng& rng,
                                                  std::size_t max_order,
                                                  TrialKind kind) {
  const std::size_t m = random_order(rng, max_order);
  const std::size_t n = random_order(rng, max_order);
  const ExactMatrix a = draw(rng, m, kind);
  const ExactMatrix b = draw(rng, n, kind);
  const ExactMatrix p = commutation_matrix<GaussInt>({m, n});
  const ExactMatrix pt = transpose(p);
  const auto inputs = [&] { return inputs_json({{"a", &a}, {"b", &b}}); };
  if (matmul(pt, p) != identity<GaussInt>(m * n)) {
    return failure("commutation matrix is not orthogonal", inputs());
  }
  if (matmul(matmul(pt, kron(a, b)), p) != kron(b, a)) {
    return failure("P^T (A (x) B) P != B (x) A", inputs());
  }
  if (matmul(matmul(pt, cartesian(a, b)), p) != cartesian(b, a)) {
    return failure("P^T (A (/) B) P != B (/) A", inputs());
  }
  return std::nullopt;
}

inline std::optional<json> scalar_remarks(TrialRng& rng, std::size_t max_order,
                                          TrialKind kind) {
  const GaussInt k = random_gauss(rng);
  const GaussInt l = random_gauss(rng);
  const ExactMatrix a = draw(rng, random_order(rng, max_order), kind);
  const ExactMatrix b = draw(rng, random_order(rng, max_order), kind);
  const auto inputs = [&] {
    json j = inputs_json({{"a", &a}, {"b", &b}});
    j["k"] = scalar_json(k);
    j["l"] = scalar_json(l);
    return j;
  };
  if (cartesian(scale(k, a), scale(k, b)) != scale(k, cartesian(a, b))) {
    return failure("kA (/) kB != k (A (/) B)", inputs());
  }
  const ExactMatrix scalar_k{{k}};
  const ExactMatrix shifted = add(a, constant_matrix(k, a.rows()));
  if (cartesian(scalar_k, a) != shifted || cartesian(a, scalar_k) != shifted) {
    return failure("k (/) A != A + kJ or A (/) k != A + kJ", inputs());
  }
  if (kron(scale(k, a), scale(l, b)) != scale(k * l, kron(a, b))) {
    return failure("aA (x) bB != ab (A (x) B)", inputs());
  }
  return std::nullopt;
}

inline std::optional<json> kron_lemmas(TrialRng& rng, std::size_t max_order,
                                       TrialKind kind) {
  const std::size_t m = random_order(rng, max_order);
  const std::size_t n = random_order(rng, max_order);
  const ExactMatrix a = draw(rng, m, kind);
  const ExactMatrix b = draw(rng, n, kind);
  const ExactMatrix c = draw(rng, m, kind);
  const ExactMatrix d = draw(rng, n, kind);
  const auto inputs = [&] {
    return inputs_json({{"a", &a}, {"b", &b}, {"c", &c}, {"d", &d}});
  };
  if (trace(kron(a, b)) != trace(a) * trace(b)) {
    return failure("tr(A (x) B) != tr(A) tr(B)", inputs());
  }
  if (matmul(kron(a, b), kron(c, d)) != kron(matmul(a, c), matmul(b, d))) {
    return failure("(A (x) B)(C (x) D) != (AC) (x) (BD)", inputs());
  }
  return std::nullopt;
}

// --- iff-theorem suites -----------------------------------------------------

inline std::optional<json> symmetry_iff(TrialRng& rng, std::size_t max_order,
                                        TrialKind kind) {
  std::size_t m = random_order(rng, max_order);
  std::size_t n = random_order(rng, max_order);
  if (kind == TrialKind::structured || kind == TrialKind::perturbed) {
    ExactMatrix a = random_symmetric_matrix(rng, m);
    ExactMatrix b = random_symmetric_matrix(rng, n);
    bool broke = false;
    if (kind == TrialKind::perturbed && (m > 1 || n > 1)) {
      ExactMatrix& victim = m > 1 ? a : b;
      victim(0, 1) += GaussInt{1};
      broke = true;
    }
    const auto res = structure_check(a, b, StructureKind::symmetric);
    const bool expected = !broke;
    if (res[2] != expected || (res[0] && res[1]) != expected) {
      return failure(broke ? "perturbed symmetric pair still reads symmetric"
                           : "symmetric pair lost symmetry in the product",
                     inputs_json({{"a", &a}, {"b", &b}}));
    }
    return std::nullopt;
  }
  const ExactMatrix a = random_matrix(rng, m);
  const ExactMatrix b = random_matrix(rng, n);
  const auto res = structure_check(a, b, StructureKind::symmetric);
  if (res[2] != (res[0] && res[1])) {
    return failure("symmetry of A (/) B differs from symmetry of A and B",
                   inputs_json({{"a", &a}, {"b", &b}}));
  }
  return std::nullopt;
}

inline std::optional<json> skew_iff(TrialRng& rng, std::size_t max_order,
                                    TrialKind kind) {
  const std::size_t m = random_order(rng, max_order);
  const std::size_t n = random_order(rng, max_order);
  if (kind == TrialKind::structured || kind == TrialKind::perturbed) {
    ExactMatrix a = random_skew_matrix(rng, m);
    ExactMatrix b = random_skew_matrix(rng, n);
    const bool broke = kind == TrialKind::perturbed;
    if (broke) {
      // A diagonal bump defeats skewness of the product at every order.
      a(0, 0) += GaussInt{1};
    }
    const auto res = structure_check(a, b, StructureKind::skew);
    const bool ok = broke ? (!res[0] && res[1] && !res[2])
                          : (res[0] && res[1] && res[2]);
    if (!ok) {
      return failure(broke ? "perturbed skew pair still reads skew"
                           : "skew pair lost skewness in the product",
                     inputs_json({{"a", &a}, {"b", &b}}));
    }
    return std::nullopt;
  }
  const ExactMatrix a = random_matrix(rng, m);
  const ExactMatrix b = random_matrix(rng, n);
  const auto res = structure_check(a, b, StructureKind::skew);
  // Factors of a skew product are only skew up to the a_{0,0} J shift
  // (J (/) (-J) = 0 is skew with non-skew factors), so the sound converse
  // normalizes that shift away.
  const GaussInt shift = a(0, 0);
  const ExactMatrix a_norm = sub(a, constant_matrix(shift, m));
  const ExactMatrix b_norm = add(b, constant_matrix(shift, n));
  const bool expected =
      is_skew_symmetric(a_norm) && is_skew_symmetric(b_norm);
  if (res[2] != expected || ((res[0] && res[1]) && !res[2])) {
    return failure("skewness of A (/) B differs from shift-normalized factors",
                   inputs_json({{"a", &a}, {"b", &b}}));
  }
  return std::nullopt;
}

inline std::optional<json> diagonal_iff(TrialRng& rng, std::size_t max_order,
                                        TrialKind kind) {
  const std::size_t m = random_order(rng, max_order);
  const std::size_t n = random_order(rng, max_order);
  if (kind == TrialKind::structured || kind == TrialKind::perturbed) {
    const GaussInt k = random_gauss(rng);
    ExactMatrix a = constant_matrix(k, m);
    ExactMatrix b = constant_matrix(-k, n);
    if (kind == TrialKind::perturbed) {
      ExactMatrix& victim = rng.index(2) == 0 ? a : b;
      perturb_random_entry(victim, rng);
      if (diagonal_witness(a, b)) {
        return failure("perturbed (kJ, -kJ) pair still yields a witness",
                       inputs_json({{"a", &a}, {"b", &b}}));
      }
      return std::nullopt;
    }
    const auto w = diagonal_witness(a, b);
    if (!w || *w != k || !is_zero(cartesian(a, b))) {
      return failure("(kJ, -kJ) pair must witness k with zero product",
                     inputs_json({{"a", &a}, {"b", &b}}));
    }
    return std::nullopt;
  }
  const ExactMatrix a = random_matrix(rng, m);
  const ExactMatrix b = random_matrix(rng, n);
  const auto w = diagonal_witness(a, b);
  const ExactMatrix prod = cartesian(a, b);
  if (w && !(is_diagonal(prod) && is_zero(prod))) {
    return failure("witness exists but A (/) B is not the zero matrix",
                   inputs_json({{"a", &a}, {"b", &b}}));
  }
  // The converse characterization needs both orders >= 2: every 1x1 block
  // row or column leaves the diagonal equations of the theorem vacuous.
  if (!w && m >= 2 && n >= 2 && is_diagonal(prod)) {
    return failure("diagonal product of orders >= 2 without a witness",
                   inputs_json({{"a", &a}, {"b", &b}}));
  }
  return std::nullopt;
}

inline std::optional<json> equality_shift_iff(TrialRng& rng,
                                              std::size_t max_order,
                                              TrialKind kind) {
  const std::size_t m = random_order(rng, max_order);
  const std::size_t n = random_order(rng, max_order);
  const ExactMatrix a = random_matrix(rng, m);
  const ExactMatrix b = random_matrix(rng, n);
  ExactMatrix c = random_matrix(rng, m);
  ExactMatrix d = random_matrix(rng, n);
  if (kind == TrialKind::structured || kind == TrialKind::perturbed) {
    const GaussInt k = random_gauss(rng);
    c = sub(a, constant_matrix(k, m));
    d = add(b, constant_matrix(k, n));
    if (kind == TrialKind::perturbed) {
      perturb_random_entry(rng.index(2) == 0 ? c : d, rng);
    } else {
      const auto w = equality_shift(a, b, c, d);
      if (!w || *w != k) {
        return failure("shifted pair must witness its shift k",
                       inputs_json({{"a", &a}, {"b", &b}, {"c", &c}, {"d", &d}}));
      }
    }
  }
  const auto w = equality_shift(a, b, c, d);
  const bool products_equal = cartesian(a, b) == cartesian(c, d);
  if (w.has_value() != products_equal) {
    return failure("witness presence differs from product equality",
                   inputs_json({{"a", &a}, {"b", &b}, {"c", &c}, {"d", &d}}));
  }
  if (kind == TrialKind::perturbed && w.has_value()) {
    return failure("perturbed shift pair still yields a witness",
                   inputs_json({{"a", &a}, {"b", &b}, {"c", &c}, {"d", &d}}));
  }
  return std::nullopt;
}

inline std::optional<json> commutation_shift_iff(TrialRng& rng,
                                                 std::size_t max_order,
                                                 TrialKind kind) {
  const std::size_t n = random_order(rng, max_order);
  const ExactMatrix a = random_matrix(rng, n);
  ExactMatrix b = random_matrix(rng, n);
  GaussInt planted{0};
  bool has_planted = false;
  if (kind == TrialKind::structured || kind == TrialKind::perturbed) {
    planted = random_gauss(rng);
    b = add(a, constant_matrix(planted, n));
    has_planted = kind == TrialKind::structured;
    if (kind == TrialKind::perturbed) {
      perturb_random_entry(b, rng);
    }
  }
  const auto w = commutation_shift(a, b);
  const bool products_equal = cartesian(a, b) == cartesian(b, a);
  if (w.has_value() != products_equal) {
    return failure("witness presence differs from commutation",
                   inputs_json({{"a", &a}, {"b", &b}}));
  }
  if (has_planted && (!w || *w != planted)) {
    return failure("planted shift k was not recovered",
                   inputs_json({{"a", &a}, {"b", &b}}));
  }
  // Breaking one entry of B = A + kJ leaves a witness only at order 1,
  // where B - A is a single entry and hence still constant.
  if (kind == TrialKind::perturbed && n >= 2 && w.has_value()) {
    return failure("perturbed commuting pair still yields a witness",
                   inputs_json({{"a", &a}, {"b", &b}}));
  }
  return std::nullopt;
}

inline std::optional<json> constant_row_sum_iff(TrialRng& rng,
                                                std::size_t max_order,
                                                TrialKind kind) {
  const std::size_t m = random_order(rng, max_order);
  const std::size_t n = random_order(rng, max_order);
  ExactMatrix a = kind == TrialKind::plain
                      ? random_matrix(rng, m)
                      : random_constant_row_sum_matrix(rng, m);
  ExactMatrix b = kind == TrialKind::plain
                      ? random_matrix(rng, n)
                      : random_constant_row_sum_matrix(rng, n);
  bool broke = false;
  if (kind == TrialKind::perturbed) {
    // A one-row matrix has a constant row sum no matter what, so break a
    // factor that actually has a second row when one exists.
    if (m > 1 || n > 1) {
      perturb_random_entry(m > 1 ? a : b, rng);
      broke = true;
    }
  }
  const auto res = constant_row_sum_check(a, b);
  if (res[2].has_value() != (res[0].has_value() && res[1].has_value())) {
    return failure("product row-sum constancy differs from the factors'",
                   inputs_json({{"a", &a}, {"b", &b}}));
  }
  if (broke && res[2].has_value()) {
    return failure("perturbed pair still has constant product row sums",
                   inputs_json({{"a", &a}, {"b", &b}}));
  }
  if (!broke && kind != TrialKind::plain) {
    const GaussInt expected = from_count<GaussInt>(n) * *res[0] +
                              from_count<GaussInt>(m) * *res[1];
    if (!res[2] || *res[2] != expected) {
      return failure("constant product row sum is not n A_row + m B_row",
                     inputs_json({{"a", &a}, {"b", &b}}));
    }
  }
  // Row block i, sub-row j of A (/) B always sums to n A_i + m B_j.
  const auto sums_a = row_sums(a);
  const auto sums_b = row_sums(b);
  const auto sums_prod = row_sums(cartesian(a, b));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const GaussInt expected = from_count<GaussInt>(n) * sums_a[i] +
                                from_count<GaussInt>(m) * sums_b[j];
      if (sums_prod[i * n + j] != expected) {
        return failure("product row sum differs from n A_i + m B_j",
                       inputs_json({{"a", &a}, {"b", &b}}));
      }
    }
  }
  return std::nullopt;
}

inline std::optional<json> all_ones_eigenvector_iff(TrialRng& rng,
                                                    std::size_t max_order,
                                                    TrialKind kind) {
  const std::size_t m = random_order(rng, max_order);
  const std::size_t n = random_order(rng, max_order);
  ExactMatrix a = kind == TrialKind::plain
                      ? random_matrix(rng, m)
                      : random_constant_row_sum_matrix(rng, m);
  ExactMatrix b = kind == TrialKind::plain
                      ? random_matrix(rng, n)
                      : random_constant_row_sum_matrix(rng, n);
  bool broke = false;
  if (kind == TrialKind::perturbed && (m > 1 || n > 1)) {
    perturb_random_entry(m > 1 ? a : b, rng);
    broke = true;
  }
  const auto res = all_ones_eigenvector_check(a, b);
  if (res[2] != (res[0] && res[1])) {
    return failure("all-ones eigenvector status differs across the product",
                   inputs_json({{"a", &a}, {"b", &b}}));
  }
  if (broke && res[2]) {
    return failure("perturbed pair still keeps the all-ones eigenvector",
                   inputs_json({{"a", &a}, {"b", &b}}));
  }
  if (kind == TrialKind::structured && !res[2]) {
    return failure("constant-row-sum pair lost the all-ones eigenvector",
                   inputs_json({{"a", &a}, {"b", &b}}));
  }
  return std::nullopt;
}

inline std::optional<json> factorize_roundtrip(TrialRng& rng,
                                               std::size_t max_order,
                                               TrialKind kind) {
  std::size_t m = random_order(rng, max_order);
  std::size_t n = random_order(rng, max_order);
  const bool refusal = kind == TrialKind::perturbed && max_order >= 2;
  if (refusal) {
    // Single-entry damage is factorizable again when either order is 1
    // ([0] (/) M = M), so refusal trials need both orders >= 2.
    m = std::max<std::size_t>(m, 2);
    n = std::max<std::size_t>(n, 2);
  }
  const ExactMatrix a = random_matrix(rng, m);
  const ExactMatrix b = random_matrix(rng, n);
  ExactMatrix prod = cartesian(a, b);
  if (refusal) {
    perturb_random_entry(prod, rng);
    if (cartesian_factorize(prod, {m, n})) {
      return failure("damaged product still factorizes",
                     inputs_json({{"a", &a}, {"b", &b}, {"m", &prod}}));
    }
    return std::nullopt;
  }
  const auto f = cartesian_factorize(prod, {m, n});
  if (!f) {
    return failure("true product failed to factorize",
                   inputs_json({{"a", &a}, {"b", &b}}));
  }
  const auto& [fa, fb] = *f;
  const GaussInt shift = b(0, 0);
  if (fb(0, 0) != GaussInt{0} || cartesian(fa, fb) != prod ||
      fa != add(a, constant_matrix(shift, m)) ||
      fb != sub(b, constant_matrix(shift, n))) {
    return failure("canonical factorization is off",
                   inputs_json({{"a", &a}, {"b", &b}}));
  }
  return std::nullopt;
}

}  // namespace suites

// ---------------------------------------------------------------------------
// Registry and campaign driver
// ---------------------------------------------------------------------------

inline const std::vector<SuiteSpec>& suite_registry() {
  static const std::vector<SuiteSpec> registry = {
      {"trace_pair", suites::trace_pair},
      {"trace_cartesian", suites::trace_cartesian},
      {"trace_power", suites::trace_power},
      {"trace_plus_minus", suites::trace_plus_minus},
      {"trace_kron_cartesian", suites::trace_kron_cartesian},
      {"trace_kron_of_cartesian_groups",
       suites::trace_kron_of_cartesian_groups_suite},
      {"trace_cartesian_of_kron_groups",
       suites::trace_cartesian_of_kron_groups_suite},
      {"product_identity", suites::product_identity},
      {"hadamard_identity", suites::hadamard_identity},
      {"distributivity", suites::distributivity},
      {"sum_cartesian", suites::sum_cartesian},
      {"entry_sum_kron", suites::entry_sum_kron},
      {"entry_sum_cartesian", suites::entry_sum_cartesian},
      {"transpose_conjugate", suites::transpose_conjugate},
      {"permutation_similarity", suites::permutation_similarity},
      {"scalar_remarks", suites::scalar_remarks},
      {"kron_lemmas", suites::kron_lemmas},
      {"symmetry_iff", suites::symmetry_iff},
      {"skew_iff", suites::skew_iff},
      {"diagonal_iff", suites::diagonal_iff},
      {"equality_shift_iff", suites::equality_shift_iff},
      {"commutation_shift_iff", suites::commutation_shift_iff},
      {"constant_row_sum_iff", suites::constant_row_sum_iff},
      {"all_ones_eigenvector_iff", suites::all_ones_eigenvector_iff},
      {"factorize_roundtrip", suites::factorize_roundtrip},
  };
  return registry;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& s : suite_registry()) {
    names.push_back(s.name);
  }
  return names;
}

inline VerifyReport run_suite(const SuiteSpec& spec, std::uint64_t trials,
                              std::uint64_t seed, std::size_t max_order) {
  VerifyReport report{spec.name, trials, 0, seed, {}};
  for (std::uint64_t t = 0; t < trials; ++t) {
    TrialRng rng = trial_rng(seed, spec.name, t);
    std::optional<json> found;
    try {
      found = spec.fn(rng, max_order, trial_kind(t));
    } catch (const std::exception& e) {
      found = detail::failure(std::string("exception: ") + e.what(),
                              json::object());
    }
    if (found) {
      ++report.failures;
      if (report.counterexamples.size() < 5) {
        json entry = {{"trial", t}};
        entry.update(*found);
        report.counterexamples.push_back(std::move(entry));
      }
    }
  }
  return report;
}

/// Runs one named suite, or all of them. Unknown names throw.
inline std::vector<VerifyReport> run_campaign(const std::string& suite,
                                              std::uint64_t trials,
                                              std::uint64_t seed,
                                              std::size_t max_order) {
  if (trials < 1) {
    throw std::invalid_argument("verify requires trials >= 1");
  }
  if (max_order < 1 || max_order > 4) {
    throw std::invalid_argument("verify requires max_order in [1, 4]");
  }
  std::vector<VerifyReport> reports;
  if (suite == "all") {
    for (const auto& spec : suite_registry()) {
      reports.push_back(run_suite(spec, trials, seed, max_order));
    }
    return reports;
  }
  for (const auto& spec : suite_registry()) {
    if (spec.name == suite) {
      reports.push_back(run_suite(spec, trials, seed, max_order));
      return reports;
    }
  }
  throw std::invalid_argument("unknown verify suite: " + suite);
}

}  // namespace cartprod
