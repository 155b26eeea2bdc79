#pragma once

#include <utility>
#include <vector>

#include "arglab/graph.hpp"

namespace fixtures {

inline arglab::Graph complete_graph(int n) {
  arglab::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline arglab::Graph cycle_graph(int n) {
  arglab::Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline arglab::Graph path_graph(int n) {
  arglab::Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline arglab::Graph complete_bipartite(int a, int b) {
  arglab::Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

// Deterministic Erdos-Renyi-style graph from a tiny LCG, for codec and
// product property sweeps.
inline arglab::Graph random_graph(int n, unsigned seed, int density_percent = 50) {
  arglab::Graph g(n);
  unsigned long long state = seed * 6364136223846793005ULL + 1442695040888963407ULL;
  auto next = [&]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<unsigned>(state >> 33);
  };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(next() % 100) < density_percent) g.add_edge(u, v);
  return g;
}

}  // namespace fixtures
