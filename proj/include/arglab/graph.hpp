#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arglab/error.hpp"

namespace arglab {

// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
// Dense on purpose: orders stay small and bit rows make common-neighbor
// counts one AND+popcount pass.  Immutable in normal use once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  bool adjacent(int u, int v) const;
  void add_edge(int u, int v);  // InvalidEdge on loops / out of range; duplicates collapse
  int degree(int u) const;
  std::vector<int> neighbors(int u) const;
  int common_neighbor_count(int u, int v) const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic
  std::size_t edge_count() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;  // row-major, n_ rows of words_ words
};

// Loopless directed graph, dense 0/1 adjacency.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);

  int order() const { return n_; }
  bool arc(int a, int b) const;
  void add_arc(int a, int b);  // InvalidEdge on loops / out of range
  int out_degree(int a) const;
  std::vector<std::pair<int, int>> arcs() const;

  bool operator==(const Digraph&) const = default;

 private:
  int n_ = 0;
  std::vector<uint8_t> adj_;
};

constexpr int kUnreachable = -1;

struct DistanceTable {
  std::vector<std::vector<int>> dist;  // kUnreachable marks disconnected pairs
  bool connected = false;
  int diameter = kUnreachable;  // kUnreachable when disconnected

  int at(int u, int v) const { return dist[u][v]; }
  // Vertices at exactly the given distance from x, ascending.
  std::vector<int> sphere(int x, int radius) const;
};

struct VertexPartition {
  std::vector<std::vector<int>> cells;  // disjoint, covering, no empty cell
};

struct QuotientMatrix {
  std::vector<int> cell_sizes;
  std::vector<std::vector<long long>> entries;  // entries[i][j] = neighbors in cell j seen from cell i

  bool operator==(const QuotientMatrix&) const = default;
  // Canonical serialization; frozen tables are compared byte-for-byte on it.
  std::string to_string() const;
};

struct BipartiteCheck {
  bool bipartite = false;
  std::vector<int> side;       // 0/1 coloring per vertex when bipartite
  std::vector<int> odd_cycle;  // closed odd walk witness when not
};

struct EquitableCheck {
  std::optional<QuotientMatrix> quotient;
  int witness_vertex = -1;  // vertex whose count into witness_cell deviates
  int witness_cell = -1;

  bool ok() const { return quotient.has_value(); }
};

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edge_list);

// All-pairs BFS.
DistanceTable distances(const Graph& g);

BipartiteCheck is_bipartite(const Graph& g);

// Exact neighborhood intersection; SameVertex when x == y.
std::vector<int> common_neighbors(const Graph& g, int x, int y);

// Vertex (a,u) of g box h maps to index a*h.order() + u.
Graph cartesian_product(const Graph& g, const Graph& h);

// Vertices x+ = x, x- = n + x; edge (x+, y-) iff x ~ y.
Graph bipartite_double(const Graph& g);

// Vertices x^{+1} = x, x^{-1} = n + x; for x != y, x^d ~ y^e iff
// (de = 1 and x ~ y) or (de = -1 and x !~ y); never x^{+1} ~ x^{-1}.
Graph taylor_double(const Graph& g);

// Taylor double of the apex-augmented graph; the input must be strongly
// regular with k = 2*mu (NotHalfCaseSrg otherwise).  Input vertices keep
// their indices, the apex becomes vertex n, negatives follow at n+1+x.
Graph taylor_extension(const Graph& g);

// Quotient by antipodal fibres; NotAntipodal unless the distance-d graph is
// a disjoint union of cliques.  Fibres are numbered by smallest member.
Graph folded_graph(const Graph& g);

// 2^m vertices as bitmasks, edges at Hamming distance 1.
Graph hypercube(int m);

Graph complement(const Graph& g);

// The involution x -> unique vertex at distance 4; requires a connected
// graph of diameter 4 with |Gamma_4(x)| = 1 for every x, else
// NoUniqueAntipode(x, count).
std::vector<int> antipode_map(const Graph& g);

// Six cells ordered by the signature (d(x,y), d(x',y)) taking values
// (0,4),(1,3),(2,2),(3,1),(3,3),(4,0), where x' is the antipode of x.
// MalformedInstance on any other signature or an empty cell.
VertexPartition signature_partition(const Graph& g, int x);
VertexPartition signature_partition(const Graph& g, int x, const DistanceTable& dt,
                                    const std::vector<int>& antipode);

// Quotient matrix if every vertex of each cell has a constant neighbor count
// into every cell; per-vertex witness otherwise.  InvalidPartition when the
// cells do not partition V.
EquitableCheck equitable_check(const Graph& g, const VertexPartition& part);

}  // namespace arglab
