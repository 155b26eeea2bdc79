#pragma once

#include <string>

#include "arglab/graph.hpp"

namespace arglab {

// Standard graph6: the order as n+63 for n <= 62 (escape byte 126 introduces
// the 3-byte form, 126 126 the 6-byte form), then the upper-triangle bits
// x01, x02, x12, x03, ... packed 6 per byte, big-endian within the group,
// zero-padded, each byte offset by +63.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& bytes);  // MalformedGraph6 on any deviation

// {"n": int, "edges": [[u,v], ...]} with u < v, sorted lexicographically.
std::string graph_json_encode(const Graph& g);
Graph graph_json_decode(const std::string& text);  // MalformedJson on schema violation

// {"n": int, "arcs": [[a,b], ...]} sorted lexicographically.
std::string digraph_json_encode(const Digraph& d);
Digraph digraph_json_decode(const std::string& text);

}  // namespace arglab
