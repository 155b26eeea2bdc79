#pragma once

// Brute-force reference computations used to pin expected values.  Everything
// here rederives results from first principles (plain adjacency lists, naive
// loops), independent of the library code paths under test.

#include <algorithm>
#include <queue>
#include <vector>

#include "arglab/graph.hpp"

namespace oracle {

inline std::vector<std::vector<int>> adjacency_lists(const arglab::Graph& g) {
  std::vector<std::vector<int>> adj(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v)
      if (u != v && g.adjacent(u, v)) adj[u].push_back(v);
  return adj;
}

inline std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int src) {
  std::vector<int> dist(adj.size(), -1);
  dist[src] = 0;
  std::queue<int> q;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u])
      if (dist[v] == -1) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

inline bool connected(const std::vector<std::vector<int>>& adj) {
  if (adj.empty()) return true;
  const auto dist = bfs_distances(adj, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == -1; });
}

inline int diameter(const std::vector<std::vector<int>>& adj) {
  int best = 0;
  for (std::size_t src = 0; src < adj.size(); ++src) {
    for (int d : bfs_distances(adj, static_cast<int>(src))) {
      if (d == -1) return -1;
      best = std::max(best, d);
    }
  }
  return best;
}

inline int common_count(const std::vector<std::vector<int>>& adj, int u, int v) {
  int count = 0;
  for (int w : adj[u])
    if (std::find(adj[v].begin(), adj[v].end(), w) != adj[v].end()) ++count;
  return count;
}

// Length of a shortest cycle, -1 for forests: BFS from every vertex, first
// cross/back edge closes a cycle.
inline int girth(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  int best = -1;
  for (int src = 0; src < n; ++src) {
    std::vector<int> dist(n, -1), parent(n, -1);
    dist[src] = 0;
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push(v);
        } else if (v != parent[u]) {
          const int cycle = dist[u] + dist[v] + 1;
          if (best == -1 || cycle < best) best = cycle;
        }
      }
    }
  }
  return best;
}

// Naive per-vertex cell counts; the equitable quotient must agree with the
// counts of every single vertex.
inline std::vector<std::vector<long long>> cell_counts_of_vertex(
    const std::vector<std::vector<int>>& adj, const std::vector<std::vector<int>>& cells, int v) {
  std::vector<int> cell_of(adj.size(), -1);
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (int u : cells[i]) cell_of[u] = static_cast<int>(i);
  std::vector<std::vector<long long>> row(1, std::vector<long long>(cells.size(), 0));
  for (int w : adj[v]) ++row[0][cell_of[w]];
  return row;
}

// --- naive arithmetic over Z_p -------------------------------------------

inline std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                                     const std::vector<int>& modulus, int p) {
  std::vector<int> prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<int>((prod[i + j] + 1LL * a[i] * b[j]) % p);
  // reduce by the monic modulus of degree r
  const int r = static_cast<int>(modulus.size()) - 1;
  for (int d = static_cast<int>(prod.size()) - 1; d >= r; --d) {
    const int f = prod[d];
    if (f == 0) continue;
    for (int i = 0; i <= r; ++i) {
      int& slot = prod[d - r + i];
      slot = static_cast<int>(((slot - 1LL * f * modulus[i]) % p + p) % p);
    }
  }
  prod.resize(r);
  return prod;
}

inline bool has_root(const std::vector<int>& poly, int p) {
  for (int x = 0; x < p; ++x) {
    long long value = 0, xp = 1;
    for (int c : poly) {
      value = (value + c * xp) % p;
      xp = xp * x % p;
    }
    if (value == 0) return true;
  }
  return false;
}

inline long long mod_order(long long a, long long p) {
  long long x = a % p, ord = 1;
  while (x != 1) {
    x = x * a % p;
    ++ord;
  }
  return ord;
}

inline std::vector<long long> squares_mod(long long p) {
  std::vector<char> seen(p, 0);
  for (long long y = 1; y < p; ++y) seen[y * y % p] = 1;
  std::vector<long long> out;
  for (long long x = 1; x < p; ++x)
    if (seen[x]) out.push_back(x);
  return out;
}

}  // namespace oracle
