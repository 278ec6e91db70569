#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "cartprod/matrix.hpp"

namespace cartprod {

/// Simple undirected graph on vertices 0..n-1. Edges form a set: inserting
/// an existing edge is a no-op, self-loops are rejected.
class Graph {
 public:
  explicit Graph(std::size_t vertex_count) : adj_(vertex_count) {
    if (vertex_count == 0) {
      throw dimension_error("graph needs at least one vertex");
    }
  }

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  void add_edge(std::size_t u, std::size_t v) {
    if (u >= vertex_count() || v >= vertex_count()) {
      throw std::out_of_range("edge endpoint out of range");
    }
    if (u == v) {
      throw std::invalid_argument("self-loops are not allowed");
    }
    if (has_edge(u, v)) {
      return;
    }
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++edge_count_;
  }

  bool has_edge(std::size_t u, std::size_t v) const {
    if (u >= vertex_count() || v >= vertex_count()) {
      throw std::out_of_range("edge endpoint out of range");
    }
    const auto& nbrs = adj_[u];
    return std::find(nbrs.begin(), nbrs.end(), v) != nbrs.end();
  }

  const std::vector<std::size_t>& neighbors(std::size_t u) const {
    return adj_[u];
  }

  /// Edges as sorted (min, max) pairs.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < vertex_count(); ++u) {
      for (std::size_t v : adj_[u]) {
        if (u < v) {
          out.emplace_back(u, v);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void set_labels(std::vector<std::string> labels) {
    if (labels.size() != vertex_count()) {
      throw dimension_error("label count must equal vertex count");
    }
    labels_ = std::move(labels);
  }

  const std::optional<std::vector<std::string>>& labels() const {
    return labels_;
  }

 private:
  std::vector<std::vector<std::size_t>> adj_;
  std::size_t edge_count_ = 0;
  std::optional<std::vector<std::string>> labels_;
};

// ---------------------------------------------------------------------------
// Stock graphs
// ---------------------------------------------------------------------------

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    g.add_edge(i, i + 1);
  }
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) {
    throw dimension_error("cycle needs at least 3 vertices");
  }
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      g.add_edge(i, j);
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Distances
// ---------------------------------------------------------------------------

/// BFS distances from one source; -1 marks unreachable vertices.
inline std::vector<std::int64_t> bfs_distances(const Graph& g,
                                               std::size_t source) {
  std::vector<std::int64_t> dist(g.vertex_count(), -1);
  dist[source] = 0;
  std::queue<std::size_t> frontier;
  frontier.push(source);
  while (!frontier.empty()) {
    const std::size_t u = frontier.front();
    frontier.pop();
    for (std::size_t v : g.neighbors(u)) {
      if (dist[v] == -1) {
        dist[v] = dist[u] + 1;
        frontier.push(v);
      }
    }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  const auto dist = bfs_distances(g, 0);
  return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

/// Exact symmetric matrix of shortest-path lengths.
inline ExactMatrix distance_matrix(const Graph& g) {
  const std::size_t n = g.vertex_count();
  ExactMatrix d(n, n);
  for (std::size_t u = 0; u < n; ++u) {
    const auto dist = bfs_distances(g, u);
    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v] < 0) {
        throw connectivity_error("graph is disconnected: no path " +
                                 std::to_string(u) + " -> " +
                                 std::to_string(v));
      }
      d(u, v) = GaussInt{dist[v]};
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Graph products
// ---------------------------------------------------------------------------

/// Cartesian product G [] H with vertex (u, v) at index u * |V(H)| + v, so
/// the distance matrix of the product equals the matrix Cartesian product
/// of the factor distance matrices entry for entry.
inline Graph graph_cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t nh = h.vertex_count();
  Graph out(checked_order_mul(g.vertex_count(), nh));
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    for (const auto& [v, w] : h.edges()) {
      out.add_edge(u * nh + v, u * nh + w);
    }
  }
  for (const auto& [u, w] : g.edges()) {
    for (std::size_t v = 0; v < nh; ++v) {
      out.add_edge(u * nh + v, w * nh + v);
    }
  }
  if (g.labels() && h.labels()) {
    std::vector<std::string> labels;
    labels.reserve(out.vertex_count());
    for (const auto& lu : *g.labels()) {
      for (const auto& lv : *h.labels()) {
        labels.push_back("(" + lu + "," + lv + ")");
      }
    }
    out.set_labels(std::move(labels));
  }
  return out;
}

/// Glue G and H at one vertex: u in G is identified with v in H. G keeps
/// its indices; the remaining H vertices follow in order.
inline Graph vertex_identification(const Graph& g, std::size_t u,
                                   const Graph& h, std::size_t v) {
  if (u >= g.vertex_count()) {
    throw std::out_of_range("identification vertex u out of range");
  }
  if (v >= h.vertex_count()) {
    throw std::out_of_range("identification vertex v out of range");
  }
  const std::size_t m = g.vertex_count();
  Graph out(m + h.vertex_count() - 1);
  const auto map_h = [&](std::size_t w) {
    if (w == v) {
      return u;
    }
    return m + (w < v ? w : w - 1);
  };
  for (const auto& [a, b] : g.edges()) {
    out.add_edge(a, b);
  }
  for (const auto& [a, b] : h.edges()) {
    out.add_edge(map_h(a), map_h(b));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Invariants
// ---------------------------------------------------------------------------

/// W(G): the sum of distances over unordered vertex pairs.
inline std::int64_t wiener_index(const Graph& g) {
  const ExactMatrix d = distance_matrix(g);
  std::int64_t w = 0;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = i + 1; j < d.cols(); ++j) {
      w += d(i, j).re();
    }
  }
  return w;
}

/// Tr(v) for every vertex: the row sums of the distance matrix.
inline std::vector<std::int64_t> transmissions(const Graph& g) {
  const ExactMatrix d = distance_matrix(g);
  std::vector<std::int64_t> out(d.rows(), 0);
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.cols(); ++j) {
      out[i] += d(i, j).re();
    }
  }
  return out;
}

inline bool is_transmission_regular(const Graph& g) {
  const auto t = transmissions(g);
  return std::all_of(t.begin(), t.end(),
                     [&](std::int64_t x) { return x == t.front(); });
}

/// Whether D(G1 [] G2) equals D(G1) (/) D(G2) entry for entry under the
/// product's vertex ordering.
inline bool distance_cartesian_check(const Graph& g1, const Graph& g2) {
  const ExactMatrix lhs = distance_matrix(graph_cartesian_product(g1, g2));
  const ExactMatrix rhs = cartesian(distance_matrix(g1), distance_matrix(g2));
  return lhs == rhs;
}

/// For |V(G1)| = |V(G2)|: W(H [] G1) >= W(H [] G2) must follow from
/// W(G1) >= W(G2), with equality exactly when W(G1) = W(G2). Checks the
/// Wiener closed form against directly built products as well.
inline bool wiener_monotonicity_check(const Graph& h, const Graph& g1,
                                      const Graph& g2) {
  if (g1.vertex_count() != g2.vertex_count()) {
    throw dimension_error("wiener_monotonicity_check needs equal orders");
  }
  const auto closed_form = [](const Graph& x, const Graph& y) {
    const auto m = static_cast<std::int64_t>(x.vertex_count());
    const auto n = static_cast<std::int64_t>(y.vertex_count());
    return n * n * wiener_index(x) + m * m * wiener_index(y);
  };
  const std::int64_t w1 = closed_form(h, g1);
  const std::int64_t w2 = closed_form(h, g2);
  if (w1 != wiener_index(graph_cartesian_product(h, g1)) ||
      w2 != wiener_index(graph_cartesian_product(h, g2))) {
    return false;
  }
  const std::int64_t wg1 = wiener_index(g1);
  const std::int64_t wg2 = wiener_index(g2);
  if (wg1 >= wg2 && w1 < w2) {
    return false;
  }
  if (wg2 >= wg1 && w2 < w1) {
    return false;
  }
  return (w1 == w2) == (wg1 == wg2);
}

}  // namespace cartprod
