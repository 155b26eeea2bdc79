#pragma once

#include <string>
#include <vector>

#include "arglab/graph.hpp"

namespace arglab {

struct IncidenceStructure {
  int points = 0;
  std::vector<std::vector<int>> blocks;  // each block a sorted point list

  bool operator==(const IncidenceStructure&) const = default;
};

struct GddParams {
  long long n = 0;        // group size
  long long m = 0;        // group count
  long long k = 0;        // block size
  long long lambda1 = 0;  // within-group pair coverage
  long long lambda2 = 0;  // cross-group pair coverage

  bool operator==(const GddParams&) const = default;
};

struct Gdd {
  IncidenceStructure base;
  std::vector<std::vector<int>> groups;
  GddParams params;
};

struct GddCheck {
  std::optional<Gdd> gdd;
  std::string failure;  // offending pair / block description
  int witness_a = -1;
  int witness_b = -1;

  bool ok() const { return gdd.has_value(); }
};

// A GDD pulled out of a graph, with the vertex identifications that produced
// it (point i came from point_vertex[i], block j is the neighborhood of
// block_vertex[j]).
struct GddExtraction {
  Gdd gdd;
  std::vector<int> point_vertex;
  std::vector<int> block_vertex;
  int base_vertex = 0;
};

struct DualGrouping {
  bool ok = false;
  std::vector<std::vector<int>> block_groups;
};

// Points become 0..P-1, blocks P..P+B-1; bipartite by construction.
Graph incidence_graph(const IncidenceStructure& s);

// Roles of points and blocks swapped.
IncidenceStructure dual_structure(const IncidenceStructure& s);

// Verifies group shape, block sizes, and both pair-coverage constants
// against the expected parameters.  InvalidPartition when groups do not
// partition the points into m groups of size n.
GddCheck gdd_check(const IncidenceStructure& s, const std::vector<std::vector<int>>& groups,
                   const GddParams& expected);

// Theorem-style extraction: points at even distance from x, groups the
// antipodal pairs, blocks the neighborhoods of odd-distance vertices.
// Requires the Q-regularity check to pass (NotApplicable otherwise).
GddExtraction gdd_from_graph(const Graph& g, int x);

// Looks for a partition of the blocks such that the dual structure is a GDD
// with the same parameters.  For group size 2 the pairing is forced by block
// disjointness; otherwise a declared grouping must be supplied.
DualGrouping dual_property_check(const Gdd& d);
DualGrouping dual_property_check(const Gdd& d, const std::vector<std::vector<int>>& declared);

// {"points": int, "groups": [[...]], "blocks": [[...]], "params": [n,m,k,l1,l2]}
std::string design_json_encode(const Gdd& d);
Gdd design_json_decode(const std::string& text);  // MalformedJson on schema violation

}  // namespace arglab
