#include "arglab/designs.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "arglab/verifiers.hpp"

namespace arglab {

namespace {

using ordered_json = nlohmann::ordered_json;

void check_point_refs(const IncidenceStructure& s) {
  for (const auto& block : s.blocks)
    for (int p : block)
      if (p < 0 || p >= s.points)
        throw Error(ErrorKind::MalformedInstance, "block references a missing point");
}

}  // namespace

Graph incidence_graph(const IncidenceStructure& s) {
  check_point_refs(s);
  Graph g(s.points + static_cast<int>(s.blocks.size()));
  for (std::size_t j = 0; j < s.blocks.size(); ++j)
    for (int p : s.blocks[j]) g.add_edge(p, s.points + static_cast<int>(j));
  return g;
}

IncidenceStructure dual_structure(const IncidenceStructure& s) {
  check_point_refs(s);
  IncidenceStructure dual;
  dual.points = static_cast<int>(s.blocks.size());
  dual.blocks.assign(s.points, {});
  for (std::size_t j = 0; j < s.blocks.size(); ++j)
    for (int p : s.blocks[j]) dual.blocks[p].push_back(static_cast<int>(j));
  return dual;
}

GddCheck gdd_check(const IncidenceStructure& s, const std::vector<std::vector<int>>& groups,
                   const GddParams& expected) {
  check_point_refs(s);
  std::vector<int> group_of(s.points, -1);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].empty()) throw Error(ErrorKind::InvalidPartition, "empty group");
    for (int p : groups[i]) {
      if (p < 0 || p >= s.points) throw Error(ErrorKind::InvalidPartition, "point out of range");
      if (group_of[p] != -1) throw Error(ErrorKind::InvalidPartition, "groups overlap");
      group_of[p] = static_cast<int>(i);
    }
  }
  for (int p = 0; p < s.points; ++p)
    if (group_of[p] == -1) throw Error(ErrorKind::InvalidPartition, "groups do not cover the points");
  if (static_cast<long long>(groups.size()) != expected.m)
    throw Error(ErrorKind::InvalidPartition,
                "expected " + std::to_string(expected.m) + " groups, got " +
                    std::to_string(groups.size()));
  for (const auto& group : groups)
    if (static_cast<long long>(group.size()) != expected.n)
      throw Error(ErrorKind::InvalidPartition, "group size differs from n");

  GddCheck out;
  for (std::size_t j = 0; j < s.blocks.size(); ++j) {
    if (static_cast<long long>(s.blocks[j].size()) != expected.k) {
      out.failure = "block " + std::to_string(j) + " has size " +
                    std::to_string(s.blocks[j].size()) + ", expected " +
                    std::to_string(expected.k);
      out.witness_a = static_cast<int>(j);
      return out;
    }
  }

  // Pair coverage in one sweep over the blocks.
  std::vector<std::vector<long long>> coverage(s.points, std::vector<long long>(s.points, 0));
  for (const auto& block : s.blocks)
    for (std::size_t a = 0; a < block.size(); ++a)
      for (std::size_t b = a + 1; b < block.size(); ++b) {
        ++coverage[block[a]][block[b]];
        ++coverage[block[b]][block[a]];
      }
  for (int p = 0; p < s.points; ++p) {
    for (int r = p + 1; r < s.points; ++r) {
      const long long want = (group_of[p] == group_of[r]) ? expected.lambda1 : expected.lambda2;
      if (coverage[p][r] != want) {
        out.failure = "pair (" + std::to_string(p) + "," + std::to_string(r) + ") lies in " +
                      std::to_string(coverage[p][r]) + " blocks, expected " + std::to_string(want);
        out.witness_a = p;
        out.witness_b = r;
        return out;
      }
    }
  }

  out.gdd = Gdd{s, groups, expected};
  return out;
}

GddExtraction gdd_from_graph(const Graph& g, int x) {
  if (x < 0 || x >= g.order())
    throw Error(ErrorKind::NotApplicable, "base vertex out of range");
  const QRegularCheck qr = q_regular_check(g);
  if (!qr.ok()) throw Error(ErrorKind::NotApplicable, "Q-regularity fails: " + qr.reason);

  const DistanceTable dt = distances(g);
  const std::vector<int> antipode = antipode_map(g);
  const long long k = g.degree(0);

  GddExtraction out;
  out.base_vertex = x;
  std::vector<int> point_index(g.order(), -1);
  for (int y = 0; y < g.order(); ++y) {
    if (dt.at(x, y) % 2 == 0) {
      point_index[y] = static_cast<int>(out.point_vertex.size());
      out.point_vertex.push_back(y);
    }
  }

  IncidenceStructure base;
  base.points = static_cast<int>(out.point_vertex.size());
  for (int z = 0; z < g.order(); ++z) {
    if (dt.at(x, z) % 2 != 1) continue;
    std::vector<int> block;
    for (int w : g.neighbors(z)) block.push_back(point_index[w]);
    std::sort(block.begin(), block.end());
    base.blocks.push_back(std::move(block));
    out.block_vertex.push_back(z);
  }

  std::vector<std::vector<int>> groups;
  for (int y : out.point_vertex) {
    if (y < antipode[y]) groups.push_back({point_index[y], point_index[antipode[y]]});
  }

  const GddParams params{2, k + 1, k, 0, (k - 1) / 2};
  const GddCheck check = gdd_check(base, groups, params);
  if (!check.ok())
    throw Error(ErrorKind::MalformedInstance, "extracted design fails its own check: " + check.failure);

  // Replication count k for every point.
  std::vector<long long> replication(base.points, 0);
  for (const auto& block : base.blocks)
    for (int p : block) ++replication[p];
  for (int p = 0; p < base.points; ++p)
    if (replication[p] != k)
      throw Error(ErrorKind::MalformedInstance,
                  "point " + std::to_string(p) + " has replication " +
                      std::to_string(replication[p]));

  out.gdd = *check.gdd;
  return out;
}

DualGrouping dual_property_check(const Gdd& d) {
  DualGrouping out;
  if (d.params.n != 2) return out;  // forced pairing only exists for group size 2
  const auto& blocks = d.base.blocks;
  const long long count = static_cast<long long>(blocks.size());
  if (count != d.params.n * d.params.m) return out;

  auto disjoint = [&](int i, int j) {
    std::size_t a = 0, b = 0;
    while (a < blocks[i].size() && b < blocks[j].size()) {
      if (blocks[i][a] == blocks[j][b]) return false;
      if (blocks[i][a] < blocks[j][b])
        ++a;
      else
        ++b;
    }
    return true;
  };

  std::vector<int> partner(blocks.size(), -1);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (i == j || !disjoint(static_cast<int>(i), static_cast<int>(j))) continue;
      if (partner[i] != -1) return out;  // ambiguous pairing
      partner[i] = static_cast<int>(j);
    }
    if (partner[i] == -1) return out;
  }
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (partner[partner[i]] != static_cast<int>(i)) return out;

  std::vector<std::vector<int>> grouping;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (static_cast<int>(i) < partner[i]) grouping.push_back({static_cast<int>(i), partner[i]});

  return dual_property_check(d, grouping);
}

DualGrouping dual_property_check(const Gdd& d, const std::vector<std::vector<int>>& declared) {
  DualGrouping out;
  const IncidenceStructure dual = dual_structure(d.base);
  try {
    if (gdd_check(dual, declared, d.params).ok()) {
      out.ok = true;
      out.block_groups = declared;
    }
  } catch (const Error&) {
    // malformed declared grouping: simply not a dual grouping
  }
  return out;
}

std::string design_json_encode(const Gdd& d) {
  ordered_json doc;
  doc["points"] = d.base.points;
  ordered_json groups = ordered_json::array();
  for (const auto& g : d.groups) groups.push_back(g);
  doc["groups"] = std::move(groups);
  ordered_json blocks = ordered_json::array();
  for (const auto& b : d.base.blocks) blocks.push_back(b);
  doc["blocks"] = std::move(blocks);
  doc["params"] = {d.params.n, d.params.m, d.params.k, d.params.lambda1, d.params.lambda2};
  return doc.dump();
}

Gdd design_json_decode(const std::string& text) {
  ordered_json doc = ordered_json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw Error(ErrorKind::MalformedJson, "parse error");
  if (!doc.is_object() || !doc.contains("points") || !doc.contains("groups") ||
      !doc.contains("blocks") || !doc.contains("params"))
    throw Error(ErrorKind::MalformedJson, "expected points, groups, blocks, params");
  if (!doc["points"].is_number_integer() || doc["points"].get<long long>() < 0)
    throw Error(ErrorKind::MalformedJson, "points must be a non-negative integer");

  Gdd d;
  d.base.points = doc["points"].get<int>();
  auto read_lists = [&](const char* key) {
    if (!doc[key].is_array()) throw Error(ErrorKind::MalformedJson, std::string(key) + " must be an array");
    std::vector<std::vector<int>> lists;
    for (const auto& entry : doc[key]) {
      if (!entry.is_array()) throw Error(ErrorKind::MalformedJson, "list entries must be arrays");
      std::vector<int> list;
      for (const auto& v : entry) {
        if (!v.is_number_integer()) throw Error(ErrorKind::MalformedJson, "points must be integers");
        const int p = v.get<int>();
        if (p < 0 || p >= d.base.points)
          throw Error(ErrorKind::MalformedJson, "point reference out of range");
        list.push_back(p);
      }
      lists.push_back(std::move(list));
    }
    return lists;
  };
  d.groups = read_lists("groups");
  d.base.blocks = read_lists("blocks");
  const auto& params = doc["params"];
  if (!params.is_array() || params.size() != 5)
    throw Error(ErrorKind::MalformedJson, "params must be [n,m,k,l1,l2]");
  for (const auto& v : params)
    if (!v.is_number_integer()) throw Error(ErrorKind::MalformedJson, "params must be integers");
  d.params = GddParams{params[0].get<long long>(), params[1].get<long long>(),
                       params[2].get<long long>(), params[3].get<long long>(),
                       params[4].get<long long>()};
  return d;
}

}  // namespace arglab
