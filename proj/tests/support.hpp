#pragma once

// Fixtures and independent reference implementations. Nothing here calls the
// library's distance, energy or geometry code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gfm/graph.hpp"

namespace support {

using gfm::EdgeSpec;
using gfm::VertexId;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct RawGraph {
  std::size_t n = 0;
  std::vector<EdgeSpec> edges;
  std::vector<double> nu;  // empty means uniform
  std::vector<std::string> labels;

  gfm::WeightedGraph build() const { return gfm::WeightedGraph::build(edges, nu, labels); }

  std::vector<double> masses() const {
    if (nu.empty()) return std::vector<double>(n, 1.0 / static_cast<double>(n));
    const double total = std::accumulate(nu.begin(), nu.end(), 0.0);
    std::vector<double> out;
    for (double w : nu) out.push_back(w / total);
    return out;
  }
};

// The five-author co-authorship example. Author k is vertex k - 1; edge
// lengths are 1 / (joint papers).
inline RawGraph coauthors() {
  return {5,
          {{0, 1, 1.0 / 5}, {1, 2, 1.0 / 10}, {0, 3, 1.0}, {0, 4, 1.0 / 10}, {4, 2, 1.0 / 20}, {4, 3, 1.0 / 30}},
          {0.5, 0.1, 0.1, 0.2, 0.1},
          {"1", "2", "3", "4", "5"}};
}

inline RawGraph path(std::size_t n, double length = 1.0) {
  RawGraph g{n, {}, {}};
  for (VertexId v = 0; v + 1 < n; ++v) g.edges.push_back({v, v + 1, length});
  return g;
}

inline RawGraph cycle(std::size_t n, double length = 1.0) {
  RawGraph g = path(n, length);
  g.edges.push_back({static_cast<VertexId>(n - 1), 0, length});
  return g;
}

inline RawGraph star(std::size_t leaves, double length = 1.0) {
  RawGraph g{leaves + 1, {}, {}};
  for (VertexId v = 1; v <= leaves; ++v) g.edges.push_back({0, v, length});
  return g;
}

// Two unit triangles {0,1,2} and {3,4,5} joined by a bridge 2-3.
inline RawGraph barbell(double bridge) {
  return {6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}, {2, 3, bridge}}, {}};
}

// Random spanning tree plus extra edges, lengths uniform in [lo, hi].
inline RawGraph random_connected(std::size_t n, double extra_density, double lo, double hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> len(lo, hi);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  RawGraph g{n, {}, {}};
  std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
  for (VertexId v = 1; v < n; ++v) {
    const auto u = static_cast<VertexId>(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng));
    g.edges.push_back({u, v, len(rng)});
    used[u][v] = used[v][u] = 1;
  }
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (!used[u][v] && coin(rng) < extra_density) {
        g.edges.push_back({u, v, len(rng)});
        used[u][v] = used[v][u] = 1;
      }
    }
  }
  return g;
}

inline std::vector<std::vector<double>> floyd_warshall(const RawGraph& g) {
  std::vector<std::vector<double>> d(g.n, std::vector<double>(g.n, kInf));
  for (std::size_t i = 0; i < g.n; ++i) d[i][i] = 0.0;
  for (const auto& e : g.edges) {
    d[e.u][e.v] = std::min(d[e.u][e.v], e.length);
    d[e.v][e.u] = std::min(d[e.v][e.u], e.length);
  }
  for (std::size_t k = 0; k < g.n; ++k)
    for (std::size_t i = 0; i < g.n; ++i)
      for (std::size_t j = 0; j < g.n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// Array-scan Dijkstra from one source, no heap, no shared state.
inline std::vector<double> naive_single_source(const RawGraph& g, VertexId source) {
  std::vector<double> d(g.n, kInf);
  std::vector<char> done(g.n, 0);
  d[source] = 0.0;
  for (std::size_t round = 0; round < g.n; ++round) {
    std::size_t best = g.n;
    for (std::size_t v = 0; v < g.n; ++v)
      if (!done[v] && (best == g.n || d[v] < d[best])) best = v;
    done[best] = 1;
    for (const auto& e : g.edges) {
      if (e.u == best) d[e.v] = std::min(d[e.v], d[best] + e.length);
      if (e.v == best) d[e.u] = std::min(d[e.u], d[best] + e.length);
    }
  }
  return d;
}

struct PathOracle {
  std::vector<std::vector<double>> dist;
  std::vector<std::vector<std::vector<std::vector<VertexId>>>> best_paths;  // every minimal simple path
};

// Enumerates every simple path between every pair. Exponential; small graphs only.
inline PathOracle enumerate_simple_paths(const RawGraph& g) {
  PathOracle out;
  out.dist.assign(g.n, std::vector<double>(g.n, kInf));
  out.best_paths.assign(g.n, std::vector<std::vector<std::vector<VertexId>>>(g.n));
  std::vector<std::vector<std::pair<VertexId, double>>> adj(g.n);
  for (const auto& e : g.edges) {
    adj[e.u].push_back({e.v, e.length});
    adj[e.v].push_back({e.u, e.length});
  }
  std::vector<VertexId> stack;
  std::vector<char> on_path(g.n, 0);
  std::function<void(VertexId, double)> dfs = [&](VertexId v, double length) {
    const VertexId s = stack.front();
    auto& d = out.dist[s][v];
    if (length < d - 1e-15) {
      d = length;
      out.best_paths[s][v] = {stack};
    } else if (std::abs(length - d) <= 1e-15) {
      out.best_paths[s][v].push_back(stack);
    }
    for (const auto& [w, l] : adj[v]) {
      if (on_path[w]) continue;
      on_path[w] = 1;
      stack.push_back(w);
      dfs(w, length + l);
      stack.pop_back();
      on_path[w] = 0;
    }
  };
  for (VertexId s = 0; s < g.n; ++s) {
    stack = {s};
    on_path.assign(g.n, 0);
    on_path[s] = 1;
    dfs(s, 0.0);
  }
  return out;
}

inline double energy_from(const std::vector<double>& dist_row, const std::vector<double>& nu) {
  double u = 0.0;
  for (std::size_t y = 0; y < nu.size(); ++y) u += nu[y] * dist_row[y] * dist_row[y];
  return 0.5 * u;
}

// Distance from a point at arc length s from u on edge (u, v, L) to every
// vertex, by the two-sided formula on a reference matrix.
inline std::vector<double> point_row(const std::vector<std::vector<double>>& d, VertexId u, VertexId v, double length,
                                     double s) {
  std::vector<double> row(d.size());
  for (std::size_t y = 0; y < d.size(); ++y) row[y] = std::min(s + d[u][y], length - s + d[v][y]);
  return row;
}

struct CstarOracle {
  double c_star = 0.0;
  double max_elevation = 0.0;
};

// Exhaustive pair scan: minimax elevations by a Floyd-Warshall closure over
// the discretized points, then the maximum of H(x,y) - U(x) - U(y) + min U.
inline CstarOracle exhaustive_cstar(const RawGraph& g, double h) {
  const auto d = floyd_warshall(g);
  const auto nu = g.masses();
  std::vector<double> u;
  for (VertexId v = 0; v < g.n; ++v) u.push_back(energy_from(d[v], nu));
  std::vector<std::pair<std::size_t, std::size_t>> links;
  for (const auto& e : g.edges) {
    const auto a = std::min(e.u, e.v);
    const auto b = std::max(e.u, e.v);
    const auto pieces = static_cast<std::size_t>(std::ceil(e.length / h));
    std::size_t prev = a;
    for (std::size_t i = 1; i < pieces; ++i) {
      const double s = e.length * static_cast<double>(i) / static_cast<double>(pieces);
      u.push_back(energy_from(point_row(d, a, b, e.length, s), nu));
      links.push_back({prev, u.size() - 1});
      prev = u.size() - 1;
    }
    links.push_back({prev, b});
  }
  const std::size_t p = u.size();
  std::vector<std::vector<double>> hh(p, std::vector<double>(p, kInf));
  for (std::size_t i = 0; i < p; ++i) hh[i][i] = u[i];
  for (const auto& [a, b] : links) hh[a][b] = hh[b][a] = std::max(u[a], u[b]);
  for (std::size_t k = 0; k < p; ++k)
    for (std::size_t i = 0; i < p; ++i) {
      if (hh[i][k] == kInf) continue;
      for (std::size_t j = 0; j < p; ++j) hh[i][j] = std::min(hh[i][j], std::max(hh[i][k], hh[k][j]));
    }
  const double lo = *std::min_element(u.begin(), u.end());
  const double hi = *std::max_element(u.begin(), u.end());
  double best = -kInf;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) best = std::max(best, hh[i][j] - u[i] - u[j]);
  return {best + lo, hi - lo};
}

inline double total_variation(const std::vector<double>& a, const std::vector<double>& b) {
  double tv = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) tv += std::abs(a[i] - b[i]);
  return 0.5 * tv;
}

}  // namespace support
