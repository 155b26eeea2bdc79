#include "arglab/codecs.hpp"

#include <algorithm>

#include <json.hpp>

namespace arglab {

namespace {

using ordered_json = nlohmann::ordered_json;

void append_size(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
}

// Returns the order and advances pos past the size field.
long long parse_size(const std::string& bytes, std::size_t& pos) {
  auto need = [&](std::size_t count) {
    if (bytes.size() - pos < count)
      throw Error(ErrorKind::MalformedGraph6, "truncated size field");
  };
  auto value = [&](std::size_t at) -> long long {
    const unsigned char b = static_cast<unsigned char>(bytes[at]);
    if (b < 63 || b > 126) throw Error(ErrorKind::MalformedGraph6, "byte out of range");
    return b - 63;
  };
  need(1);
  if (value(pos) != 63) return value(pos++);
  ++pos;
  need(1);
  if (value(pos) != 63) {
    need(3);
    long long n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | value(pos++);
    if (n <= 62) throw Error(ErrorKind::MalformedGraph6, "non-minimal size encoding");
    return n;
  }
  ++pos;
  need(6);
  long long n = 0;
  for (int i = 0; i < 6; ++i) n = (n << 6) | value(pos++);
  if (n <= 258047) throw Error(ErrorKind::MalformedGraph6, "non-minimal size encoding");
  return n;
}

ordered_json parse_json(const std::string& text) {
  ordered_json doc = ordered_json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw Error(ErrorKind::MalformedJson, "parse error");
  return doc;
}

int json_int(const ordered_json& v, const char* what) {
  if (!v.is_number_integer()) throw Error(ErrorKind::MalformedJson, std::string(what) + " must be an integer");
  return v.get<int>();
}

// Shared shape checks for {"n":…, "<key>":[[a,b],…]}.
std::pair<int, std::vector<std::pair<int, int>>> parse_pair_list_doc(const std::string& text,
                                                                     const char* key) {
  const ordered_json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("n") || !doc.contains(key))
    throw Error(ErrorKind::MalformedJson, std::string("expected object with n and ") + key);
  const int n = json_int(doc["n"], "n");
  if (n < 0) throw Error(ErrorKind::MalformedJson, "n must be non-negative");
  if (!doc[key].is_array()) throw Error(ErrorKind::MalformedJson, std::string(key) + " must be an array");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& entry : doc[key]) {
    if (!entry.is_array() || entry.size() != 2)
      throw Error(ErrorKind::MalformedJson, "entries must be pairs");
    pairs.emplace_back(json_int(entry[0], "endpoint"), json_int(entry[1], "endpoint"));
  }
  return {n, std::move(pairs)};
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  append_size(out, n);
  int acc = 0, filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph graph6_decode(const std::string& bytes) {
  std::size_t pos = 0;
  const long long n = parse_size(bytes, pos);
  if (n > 100000) throw Error(ErrorKind::MalformedGraph6, "order beyond desk scale");
  const long long bit_count = n * (n - 1) / 2;
  const std::size_t expected = static_cast<std::size_t>((bit_count + 5) / 6);
  if (bytes.size() - pos != expected)
    throw Error(ErrorKind::MalformedGraph6, bytes.size() - pos < expected ? "truncated bit field"
                                                                          : "trailing bytes");
  Graph g(static_cast<int>(n));
  long long bit = 0;
  int u = 0, v = 1;  // runs through the column-major upper triangle
  for (std::size_t i = pos; i < bytes.size(); ++i) {
    const unsigned char b = static_cast<unsigned char>(bytes[i]);
    if (b < 63 || b > 126) throw Error(ErrorKind::MalformedGraph6, "byte out of range");
    const int group = b - 63;
    for (int shift = 5; shift >= 0; --shift, ++bit) {
      const int value = (group >> shift) & 1;
      if (bit >= bit_count) {
        if (value != 0) throw Error(ErrorKind::MalformedGraph6, "nonzero padding");
        continue;
      }
      if (value) g.add_edge(u, v);
      if (++u == v) {
        u = 0;
        ++v;
      }
    }
  }
  return g;
}

std::string graph_json_encode(const Graph& g) {
  ordered_json doc;
  doc["n"] = g.order();
  auto edge_list = g.edges();
  std::sort(edge_list.begin(), edge_list.end());
  ordered_json edges = ordered_json::array();
  for (auto [u, v] : edge_list) edges.push_back({u, v});
  doc["edges"] = std::move(edges);
  return doc.dump();
}

Graph graph_json_decode(const std::string& text) {
  auto [n, pairs] = parse_pair_list_doc(text, "edges");
  Graph g(n);
  for (auto [u, v] : pairs) {
    if (u < 0 || v < 0 || u >= n || v >= n || u >= v)
      throw Error(ErrorKind::MalformedJson, "edge endpoints must satisfy 0 <= u < v < n");
    g.add_edge(u, v);
  }
  return g;
}

std::string digraph_json_encode(const Digraph& d) {
  ordered_json doc;
  doc["n"] = d.order();
  ordered_json arcs = ordered_json::array();
  for (auto [a, b] : d.arcs()) arcs.push_back({a, b});
  doc["arcs"] = std::move(arcs);
  return doc.dump();
}

Digraph digraph_json_decode(const std::string& text) {
  auto [n, pairs] = parse_pair_list_doc(text, "arcs");
  Digraph d(n);
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n || a == b)
      throw Error(ErrorKind::MalformedJson, "arc endpoints must be distinct and in range");
    d.add_arc(a, b);
  }
  return d;
}

}  // namespace arglab
