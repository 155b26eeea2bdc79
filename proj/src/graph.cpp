#include "arglab/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <queue>
#include <sstream>

#include "arglab/verifiers.hpp"

namespace arglab {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {
  if (n < 0) throw Error(ErrorKind::InvalidEdge, "negative vertex count");
}

bool Graph::adjacent(int u, int v) const {
  return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw Error(ErrorKind::InvalidEdge, "vertex out of range");
  if (u == v) throw Error(ErrorKind::InvalidEdge, "loop");
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= uint64_t{1} << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= uint64_t{1} << (u & 63);
}

int Graph::degree(int u) const {
  int d = 0;
  for (int w = 0; w < words_; ++w)
    d += std::popcount(bits_[static_cast<std::size_t>(u) * words_ + w]);
  return d;
}

std::vector<int> Graph::neighbors(int u) const {
  std::vector<int> out;
  for (int w = 0; w < words_; ++w) {
    uint64_t word = bits_[static_cast<std::size_t>(u) * words_ + w];
    while (word) {
      int bit = std::countr_zero(word);
      out.push_back(w * 64 + bit);
      word &= word - 1;
    }
  }
  return out;
}

int Graph::common_neighbor_count(int u, int v) const {
  int c = 0;
  for (int w = 0; w < words_; ++w)
    c += std::popcount(bits_[static_cast<std::size_t>(u) * words_ + w] &
                       bits_[static_cast<std::size_t>(v) * words_ + w]);
  return c;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (int u = 0; u < n_; ++u) total += static_cast<std::size_t>(degree(u));
  return total / 2;
}

Digraph::Digraph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 0) throw Error(ErrorKind::InvalidEdge, "negative vertex count");
}

bool Digraph::arc(int a, int b) const { return adj_[static_cast<std::size_t>(a) * n_ + b] != 0; }

void Digraph::add_arc(int a, int b) {
  if (a < 0 || b < 0 || a >= n_ || b >= n_)
    throw Error(ErrorKind::InvalidEdge, "vertex out of range");
  if (a == b) throw Error(ErrorKind::InvalidEdge, "loop");
  adj_[static_cast<std::size_t>(a) * n_ + b] = 1;
}

int Digraph::out_degree(int a) const {
  int d = 0;
  for (int b = 0; b < n_; ++b) d += adj_[static_cast<std::size_t>(a) * n_ + b];
  return d;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (arc(a, b)) out.emplace_back(a, b);
  return out;
}

std::vector<int> DistanceTable::sphere(int x, int radius) const {
  std::vector<int> out;
  for (int y = 0; y < static_cast<int>(dist[x].size()); ++y)
    if (dist[x][y] == radius) out.push_back(y);
  return out;
}

std::string QuotientMatrix::to_string() const {
  std::ostringstream os;
  os << "sizes=[";
  for (std::size_t i = 0; i < cell_sizes.size(); ++i)
    os << (i ? "," : "") << cell_sizes[i];
  os << "];rows=[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < entries[i].size(); ++j)
      os << (j ? "," : "") << entries[i][j];
    os << "]";
  }
  os << "]";
  return os.str();
}

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edge_list) {
  Graph g(n);
  for (auto [u, v] : edge_list) g.add_edge(u, v);
  return g;
}

DistanceTable distances(const Graph& g) {
  const int n = g.order();
  DistanceTable table;
  table.dist.assign(n, std::vector<int>(n, kUnreachable));
  table.connected = true;
  table.diameter = 0;
  for (int src = 0; src < n; ++src) {
    auto& d = table.dist[src];
    d[src] = 0;
    std::queue<int> frontier;
    frontier.push(src);
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop();
      for (int v : g.neighbors(u)) {
        if (d[v] == kUnreachable) {
          d[v] = d[u] + 1;
          frontier.push(v);
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      if (d[v] == kUnreachable)
        table.connected = false;
      else if (table.diameter != kUnreachable)
        table.diameter = std::max(table.diameter, d[v]);
    }
    if (!table.connected) table.diameter = kUnreachable;
  }
  if (n == 0) {
    table.connected = true;
    table.diameter = 0;
  }
  return table;
}

BipartiteCheck is_bipartite(const Graph& g) {
  const int n = g.order();
  BipartiteCheck out;
  out.side.assign(n, -1);
  std::vector<int> parent(n, -1);
  for (int src = 0; src < n; ++src) {
    if (out.side[src] != -1) continue;
    out.side[src] = 0;
    std::queue<int> frontier;
    frontier.push(src);
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop();
      for (int v : g.neighbors(u)) {
        if (out.side[v] == -1) {
          out.side[v] = 1 - out.side[u];
          parent[v] = u;
          frontier.push(v);
        } else if (out.side[v] == out.side[u]) {
          // Trace both endpoints to the root: u-path + v-path + edge uv is a
          // closed odd walk, which contains an odd cycle.
          std::vector<int> up, vp;
          for (int w = u; w != -1; w = parent[w]) up.push_back(w);
          for (int w = v; w != -1; w = parent[w]) vp.push_back(w);
          std::reverse(up.begin(), up.end());
          out.odd_cycle = up;
          out.odd_cycle.insert(out.odd_cycle.end(), vp.begin(), vp.end());
          out.bipartite = false;
          out.side.clear();
          return out;
        }
      }
    }
  }
  out.bipartite = true;
  return out;
}

std::vector<int> common_neighbors(const Graph& g, int x, int y) {
  if (x == y) throw Error(ErrorKind::SameVertex, "common_neighbors needs distinct vertices");
  std::vector<int> out;
  for (int v : g.neighbors(x))
    if (g.adjacent(y, v)) out.push_back(v);
  return out;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int gn = g.order(), hn = h.order();
  Graph out(gn * hn);
  for (int a = 0; a < gn; ++a)
    for (int u = 0; u < hn; ++u) {
      for (int w : h.neighbors(u))
        if (u < w) out.add_edge(a * hn + u, a * hn + w);
      for (int b : g.neighbors(a))
        if (a < b) out.add_edge(a * hn + u, b * hn + u);
    }
  return out;
}

Graph bipartite_double(const Graph& g) {
  const int n = g.order();
  Graph out(2 * n);
  for (auto [u, v] : g.edges()) {
    out.add_edge(u, n + v);
    out.add_edge(v, n + u);
  }
  return out;
}

Graph taylor_double(const Graph& g) {
  const int n = g.order();
  Graph out(2 * n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (g.adjacent(x, y)) {
        out.add_edge(x, y);
        out.add_edge(n + x, n + y);
      } else {
        out.add_edge(x, n + y);
        out.add_edge(y, n + x);
      }
    }
  return out;
}

Graph taylor_extension(const Graph& g) {
  ArCheck srg = strongly_regular_params(g);
  if (!srg.ok() || srg.params->k != 2 * srg.params->mu)
    throw Error(ErrorKind::NotHalfCaseSrg,
                "input must be strongly regular with k = 2*mu");
  const int n = g.order();
  Graph apex(n + 1);
  for (auto [u, v] : g.edges()) apex.add_edge(u, v);
  for (int v = 0; v < n; ++v) apex.add_edge(v, n);
  return taylor_double(apex);
}

Graph folded_graph(const Graph& g) {
  const DistanceTable dt = distances(g);
  if (!dt.connected || dt.diameter < 2)
    throw Error(ErrorKind::NotAntipodal, "graph must be connected with diameter >= 2");
  const int n = g.order();
  const int d = dt.diameter;

  // Fibres: components of the distance-d graph, each required to be a clique.
  std::vector<int> fibre(n, -1);
  std::vector<std::vector<int>> fibres;
  for (int x = 0; x < n; ++x) {
    if (fibre[x] != -1) continue;
    std::vector<int> members{x};
    for (int y = 0; y < n; ++y)
      if (dt.at(x, y) == d) members.push_back(y);
    for (int a : members)
      for (int b : members)
        if (a != b && dt.at(a, b) != d)
          throw Error(ErrorKind::NotAntipodal, "distance-" + std::to_string(d) +
                                                   " graph is not a clique union");
    for (int a : members) {
      if (fibre[a] != -1) throw Error(ErrorKind::NotAntipodal, "fibres overlap");
      fibre[a] = static_cast<int>(fibres.size());
    }
    fibres.push_back(std::move(members));
  }

  Graph out(static_cast<int>(fibres.size()));
  for (auto [u, v] : g.edges())
    if (fibre[u] != fibre[v]) out.add_edge(fibre[u], fibre[v]);
  return out;
}

Graph hypercube(int m) {
  if (m < 1) throw Error(ErrorKind::InvalidOrder, "hypercube dimension must be >= 1");
  if (m > 20) throw Error(ErrorKind::OrderLimitExceeded, "hypercube dimension too large");
  Graph g(1 << m);
  for (int x = 0; x < (1 << m); ++x)
    for (int i = 0; i < m; ++i)
      if (x < (x ^ (1 << i))) g.add_edge(x, x ^ (1 << i));
  return g;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

std::vector<int> antipode_map(const Graph& g) {
  const DistanceTable dt = distances(g);
  if (!dt.connected) throw Error(ErrorKind::NotApplicable, "graph is disconnected");
  const int n = g.order();
  std::vector<int> antipode(n, -1);
  for (int x = 0; x < n; ++x) {
    const auto far = dt.sphere(x, 4);
    if (far.size() != 1)
      throw Error(ErrorKind::NoUniqueAntipode,
                  "vertex " + std::to_string(x) + " has " + std::to_string(far.size()) +
                      " vertices at distance 4",
                  x, static_cast<long long>(far.size()));
    antipode[x] = far[0];
  }
  if (dt.diameter != 4)
    throw Error(ErrorKind::NotApplicable,
                "diameter is " + std::to_string(dt.diameter) + ", need 4");
  return antipode;
}

VertexPartition signature_partition(const Graph& g, int x) {
  return signature_partition(g, x, distances(g), antipode_map(g));
}

VertexPartition signature_partition(const Graph& g, int x, const DistanceTable& dt,
                                    const std::vector<int>& antipode) {
  static constexpr std::array<std::pair<int, int>, 6> kSignatures = {
      {{0, 4}, {1, 3}, {2, 2}, {3, 1}, {3, 3}, {4, 0}}};
  const int xp = antipode[x];
  VertexPartition part;
  part.cells.assign(6, {});
  for (int y = 0; y < g.order(); ++y) {
    const std::pair<int, int> sig{dt.at(x, y), dt.at(xp, y)};
    bool placed = false;
    for (std::size_t i = 0; i < kSignatures.size(); ++i) {
      if (sig == kSignatures[i]) {
        part.cells[i].push_back(y);
        placed = true;
        break;
      }
    }
    if (!placed)
      throw Error(ErrorKind::MalformedInstance,
                  "vertex " + std::to_string(y) + " has signature (" +
                      std::to_string(sig.first) + "," + std::to_string(sig.second) + ")");
  }
  for (const auto& cell : part.cells)
    if (cell.empty()) throw Error(ErrorKind::MalformedInstance, "empty signature cell");
  return part;
}

EquitableCheck equitable_check(const Graph& g, const VertexPartition& part) {
  const int n = g.order();
  std::vector<int> cell_of(n, -1);
  for (std::size_t i = 0; i < part.cells.size(); ++i) {
    if (part.cells[i].empty()) throw Error(ErrorKind::InvalidPartition, "empty cell");
    for (int v : part.cells[i]) {
      if (v < 0 || v >= n) throw Error(ErrorKind::InvalidPartition, "vertex out of range");
      if (cell_of[v] != -1) throw Error(ErrorKind::InvalidPartition, "cells overlap");
      cell_of[v] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < n; ++v)
    if (cell_of[v] == -1) throw Error(ErrorKind::InvalidPartition, "cells do not cover V");

  const int cells = static_cast<int>(part.cells.size());
  EquitableCheck out;
  QuotientMatrix q;
  q.cell_sizes.reserve(cells);
  for (const auto& cell : part.cells) q.cell_sizes.push_back(static_cast<int>(cell.size()));
  q.entries.assign(cells, std::vector<long long>(cells, -1));

  for (int i = 0; i < cells; ++i) {
    for (int v : part.cells[i]) {
      std::vector<long long> counts(cells, 0);
      for (int w : g.neighbors(v)) ++counts[cell_of[w]];
      for (int j = 0; j < cells; ++j) {
        if (q.entries[i][j] == -1) {
          q.entries[i][j] = counts[j];
        } else if (q.entries[i][j] != counts[j]) {
          out.witness_vertex = v;
          out.witness_cell = j;
          return out;
        }
      }
    }
  }
  out.quotient = std::move(q);
  return out;
}

}  // namespace arglab
