#pragma once

#include "arglab/designs.hpp"
#include "arglab/finite_field.hpp"
#include "arglab/graph.hpp"
#include "arglab/int_matrix.hpp"

namespace arglab {

// Constructions refuse q above this unless the caller raises the limit
// (the CLI wires ARGLAB_MAX_Q through); everything downstream is O(q^2).
constexpr long long kDefaultMaxQ = 4096;

struct TwoClassScheme {
  int n = 0;
  IntMatrix a1;
  IntMatrix a2;  // transpose of a1
};

// The bordered block matrices of order 2(n+1) built from a non-symmetric
// 2-class scheme: c1 has block rows
//   [0 1 0 0; 0 A1 A2 1^T; 1^T A2 A1 0; 0 0 1 0],
// c2 = c1^T, c3 = J - c0 - c1 - c2.
struct CMatrixSet {
  int n = 0;
  IntMatrix c0;
  IntMatrix c1;
  IntMatrix c2;
  IntMatrix c3;
};

// Vertices are the field elements in encoding order; x ~ y iff x - y is a
// nonzero square.  Requires q = 1 mod 4.
Graph paley_graph(long long q, long long max_q = kDefaultMaxQ);

// x ~ y iff x - y lies in {w^j : j = 0,1 mod 4}.  Requires q = p^r >= 5
// with p = 3 mod 4 and r even.
Graph peisert_graph(long long q, long long max_q = kDefaultMaxQ);

// Tournament with an arc a -> b iff b - a is a nonzero square.  Requires
// q >= 7, q = 3 mod 4.
Digraph paley_digraph(long long q, long long max_q = kDefaultMaxQ);

// {I, A1, A1^T} for the Paley tournament.
TwoClassScheme paley_2class_scheme(long long q, long long max_q = kDefaultMaxQ);

// InvalidOrder unless n >= 5 odd.
CMatrixSet im_c_matrices(const TwoClassScheme& s);

// Left vertices 0..rows-1, right vertices rows..rows+cols-1.
Graph graph_from_biadjacency(const IntMatrix& b);

// Bipartite graph with biadjacency c1; amply regular (4q+4, q, 0, (q-1)/2)
// of diameter 4.
Graph im_pipeline(long long q, long long max_q = kDefaultMaxQ);

enum class ConferenceKind { Paley, Peisert };

// Bipartite double of the Taylor extension of the conference graph;
// amply regular (4q+4, q, 0, (q-1)/2) of diameter 4.
Graph taylor_bd_pipeline(ConferenceKind kind, long long q, long long max_q = kDefaultMaxQ);

// Points Z7, blocks the complements of the Fano lines {i+1, i+2, i+4}.
IncidenceStructure lambda_design();

// Point-block incidence graph of lambda_design(): the 14-vertex bipartite
// (0,2)-graph of valency 4.
Graph lambda_14();

Graph k2_box_lambda();

}  // namespace arglab
