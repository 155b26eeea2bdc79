#include "arglab/verifiers.hpp"

#include <algorithm>
#include <sstream>

namespace arglab {

std::string ArParams::to_string() const {
  std::ostringstream os;
  os << "(" << v << "," << k << "," << lambda << "," << mu << ")";
  return os.str();
}

const char* to_string(CheckFailure f) {
  switch (f) {
    case CheckFailure::None: return "None";
    case CheckFailure::NotConnected: return "NotConnected";
    case CheckFailure::DiameterTooSmall: return "DiameterTooSmall";
    case CheckFailure::DiameterNotTwo: return "DiameterNotTwo";
    case CheckFailure::NotRegular: return "NotRegular";
    case CheckFailure::LambdaNotConstant: return "LambdaNotConstant";
    case CheckFailure::MuNotConstant: return "MuNotConstant";
    case CheckFailure::NotDistanceRegular: return "NotDistanceRegular";
    case CheckFailure::NotApplicable: return "NotApplicable";
    case CheckFailure::NoAntipode: return "NoAntipode";
    case CheckFailure::MalformedSignature: return "MalformedSignature";
    case CheckFailure::NotEquitable: return "NotEquitable";
    case CheckFailure::QuotientMismatch: return "QuotientMismatch";
  }
  return "Unknown";
}

const char* to_string(GraphCase c) {
  switch (c) {
    case GraphCase::FiveCube: return "FiveCube";
    case GraphCase::K2BoxLambda: return "K2BoxLambda";
    case GraphCase::GddIncidence: return "GddIncidence";
    case GraphCase::Contradiction: return "Contradiction";
  }
  return "Unknown";
}

long long IntersectionArray::a(int i) const {
  const long long bi = (i >= 0 && i < static_cast<int>(b.size())) ? b[i] : 0;
  const long long ci = (i >= 1 && i <= static_cast<int>(c.size())) ? c[i - 1] : 0;
  return k() - bi - ci;
}

std::string IntersectionArray::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
  os << ";";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << "}";
  return os.str();
}

bool FeasibilityReport::all_pass() const {
  return std::none_of(findings.begin(), findings.end(),
                      [](const FeasibilityFinding& f) { return f.violated; });
}

namespace {

// Shared regularity scaffold: the amply and strongly regular extractions
// differ only in which pairs the mu count ranges over.
ArCheck regular_pair_counts(const Graph& g, bool strongly) {
  ArCheck out;
  const DistanceTable dt = distances(g);
  if (!dt.connected) {
    out.failure = CheckFailure::NotConnected;
    return out;
  }
  if (strongly) {
    if (dt.diameter != 2) {
      out.failure = CheckFailure::DiameterNotTwo;
      return out;
    }
  } else if (dt.diameter < 2) {
    out.failure = CheckFailure::DiameterTooSmall;
    return out;
  }
  const int n = g.order();
  const int k = g.degree(0);
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != k) {
      out.failure = CheckFailure::NotRegular;
      out.witness = {v, -1, k, g.degree(v)};
      return out;
    }
  }
  long long lambda = -1, mu = -1;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int d = dt.at(u, v);
      const bool mu_pair = strongly ? d >= 2 : d == 2;
      if (d != 1 && !mu_pair) continue;
      const long long c = g.common_neighbor_count(u, v);
      long long& constant = (d == 1) ? lambda : mu;
      if (constant == -1) {
        constant = c;
      } else if (constant != c) {
        out.failure = (d == 1) ? CheckFailure::LambdaNotConstant : CheckFailure::MuNotConstant;
        out.witness = {u, v, constant, c};
        return out;
      }
    }
  }
  out.params = ArParams{n, k, lambda, mu};
  return out;
}

}  // namespace

ArCheck amply_regular_params(const Graph& g) { return regular_pair_counts(g, false); }

ArCheck strongly_regular_params(const Graph& g) { return regular_pair_counts(g, true); }

DrCheck distance_regular_array(const Graph& g) {
  DrCheck out;
  const DistanceTable dt = distances(g);
  if (!dt.connected) {
    out.failure = CheckFailure::NotConnected;
    return out;
  }
  const int n = g.order();
  const int d = dt.diameter;
  std::vector<long long> b(d + 1, -1), c(d + 1, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int i = dt.at(x, y);
      long long bi = 0, ci = 0;
      for (int w : g.neighbors(y)) {
        if (dt.at(x, w) == i + 1)
          ++bi;
        else if (dt.at(x, w) == i - 1)
          ++ci;
      }
      if (i < d) {
        if (b[i] == -1) {
          b[i] = bi;
        } else if (b[i] != bi) {
          out.failure = CheckFailure::NotDistanceRegular;
          out.witness = {x, y, b[i], bi};
          out.witness_distance = i;
          out.witness_side = 'b';
          return out;
        }
      }
      if (i >= 1) {
        if (c[i] == -1) {
          c[i] = ci;
        } else if (c[i] != ci) {
          out.failure = CheckFailure::NotDistanceRegular;
          out.witness = {x, y, c[i], ci};
          out.witness_distance = i;
          out.witness_side = 'c';
          return out;
        }
      }
    }
  }
  IntersectionArray arr;
  arr.b.assign(b.begin(), b.begin() + d);
  arr.c.assign(c.begin() + 1, c.end());
  out.array = std::move(arr);
  return out;
}

SesquiCheck is_sesqui_regular(const Graph& g) {
  SesquiCheck out;
  const ArCheck base = regular_pair_counts(g, false);
  if (base.ok()) {
    out.params = SesquiParams{base.params->v, base.params->k, base.params->mu};
    return out;
  }
  // Lambda non-constancy is irrelevant here; recompute mu only.
  if (base.failure != CheckFailure::LambdaNotConstant) {
    out.failure = base.failure;
    out.witness = base.witness;
    return out;
  }
  const DistanceTable dt = distances(g);
  const int n = g.order();
  long long mu = -1;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (dt.at(u, v) != 2) continue;
      const long long c = g.common_neighbor_count(u, v);
      if (mu == -1) {
        mu = c;
      } else if (mu != c) {
        out.failure = CheckFailure::MuNotConstant;
        out.witness = {u, v, mu, c};
        return out;
      }
    }
  }
  out.params = SesquiParams{n, g.degree(0), mu};
  return out;
}

bool is_02_graph(const Graph& g) {
  const DistanceTable dt = distances(g);
  if (!dt.connected) return false;
  const int n = g.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const int c = g.common_neighbor_count(u, v);
      if (c != 0 && c != 2) return false;
    }
  return true;
}

QuotientMatrix expected_quotient(long long k) {
  if (k < 5 || k % 2 == 0)
    throw Error(ErrorKind::InvalidValency, "valency must be odd and >= 5");
  const long long h = (k - 1) / 2;
  QuotientMatrix q;
  q.cell_sizes = {1, static_cast<int>(k), static_cast<int>(2 * k), static_cast<int>(k), 2, 1};
  q.entries = {
      {0, k, 0, 0, 0, 0},
      {1, 0, k - 1, 0, 0, 0},
      {0, h, 0, h, 1, 0},
      {0, 0, k - 1, 0, 0, 1},
      {0, 0, k, 0, 0, 0},
      {0, 0, 0, k, 0, 0},
  };
  return q;
}

QRegularCheck q_regular_check(const Graph& g) {
  QRegularCheck out;
  const ArCheck ar = amply_regular_params(g);
  if (!ar.ok()) {
    out.failure = CheckFailure::NotApplicable;
    out.reason = std::string("not amply regular: ") + to_string(ar.failure);
    return out;
  }
  const long long k = ar.params->k;
  if (k < 5 || k % 2 == 0 || 2 * ar.params->mu != k - 1) {
    out.failure = CheckFailure::NotApplicable;
    out.reason = "needs odd k >= 5 with mu = (k-1)/2, got " + ar.params->to_string();
    return out;
  }
  const DistanceTable dt = distances(g);
  if (dt.diameter != 4) {
    out.failure = CheckFailure::NotApplicable;
    out.reason = "diameter is " + std::to_string(dt.diameter) + ", need 4";
    return out;
  }

  std::vector<int> antipode;
  try {
    antipode = antipode_map(g);
  } catch (const Error& e) {
    out.failure = CheckFailure::NoAntipode;
    out.reason = e.what();
    out.witness_vertex = static_cast<int>(e.detail_a());
    out.gamma4_count = e.detail_b();
    return out;
  }

  const QuotientMatrix expected = expected_quotient(k);
  for (int x = 0; x < g.order(); ++x) {
    VertexPartition part;
    try {
      part = signature_partition(g, x, dt, antipode);
    } catch (const Error& e) {
      out.failure = CheckFailure::MalformedSignature;
      out.reason = e.what();
      out.witness_vertex = x;
      return out;
    }
    const EquitableCheck eq = equitable_check(g, part);
    if (!eq.ok()) {
      out.failure = CheckFailure::NotEquitable;
      out.reason = "signature partition not equitable at base vertex " + std::to_string(x);
      out.witness_vertex = x;
      out.witness_cell = eq.witness_cell;
      return out;
    }
    if (*eq.quotient != expected) {
      out.failure = CheckFailure::QuotientMismatch;
      out.reason = "quotient deviates from the expected diagram at base vertex " +
                   std::to_string(x);
      out.witness_vertex = x;
      return out;
    }
  }
  out.quotient = expected;
  return out;
}

FeasibilityReport feasibility_diagnostics(const ArParams& p, int diameter) {
  FeasibilityReport report;
  if (diameter >= 3) {
    const long long b1 = p.k - p.lambda - 1;
    FeasibilityFinding f;
    f.bound = "b1_lower_bound";
    std::ostringstream os;
    os << "3*b1 = " << 3 * b1 << " >= k+1 = " << p.k + 1;
    f.inequality = os.str();
    f.violated = 3 * b1 < p.k + 1;
    report.findings.push_back(std::move(f));
  }
  if (diameter >= 4) {
    FeasibilityFinding f;
    f.bound = "mu_upper_bound";
    std::ostringstream os;
    os << "2*mu = " << 2 * p.mu << " <= k = " << p.k;
    f.inequality = os.str();
    f.violated = 2 * p.mu > p.k;
    report.findings.push_back(std::move(f));
  }
  return report;
}

Classification classify(const Graph& g) {
  const DistanceTable dt = distances(g);
  if (!dt.connected) throw Error(ErrorKind::NotApplicable, "graph is disconnected");
  const ArCheck ar = amply_regular_params(g);
  if (!ar.ok())
    throw Error(ErrorKind::NotApplicable,
                std::string("not amply regular: ") + to_string(ar.failure));
  const ArParams p = *ar.params;
  if (p.k < 5 || p.k % 2 == 0)
    throw Error(ErrorKind::NotApplicable, "valency must be odd and >= 5, got " + p.to_string());
  if (2 * p.mu != p.k - 1)
    throw Error(ErrorKind::NotApplicable, "mu must equal (k-1)/2, got " + p.to_string());
  if (dt.diameter < 4)
    throw Error(ErrorKind::NotApplicable,
                "diameter must be >= 4, got " + std::to_string(dt.diameter));

  Classification result;
  result.params = p;
  result.diameter = dt.diameter;

  if (dt.diameter == 5) {
    if (p == ArParams{32, 5, 0, 2} && is_bipartite(g).bipartite) {
      try {
        const Graph folded = folded_graph(g);
        const ArCheck srg = strongly_regular_params(folded);
        if (srg.ok() && *srg.params == ArParams{16, 5, 0, 2}) {
          result.kind = GraphCase::FiveCube;
          result.folded_params = *srg.params;
          return result;
        }
        result.kind = GraphCase::Contradiction;
        result.note = "diameter 5 with (32,5,0,2) but the folded graph is not SRG(16,5,0,2)";
        return result;
      } catch (const Error& e) {
        result.kind = GraphCase::Contradiction;
        result.note = std::string("diameter 5 with (32,5,0,2) but not antipodal: ") + e.what();
        return result;
      }
    }
    result.kind = GraphCase::Contradiction;
    result.note = "diameter 5 forces the 5-cube, parameters disagree: " + p.to_string();
    return result;
  }

  if (dt.diameter == 4) {
    const QRegularCheck qr = q_regular_check(g);
    if (qr.ok()) {
      result.kind = GraphCase::GddIncidence;
      result.design = gdd_from_graph(g, 0);
      return result;
    }
    if (p == ArParams{28, 5, 0, 2}) {
      result.kind = GraphCase::K2BoxLambda;
      result.note = qr.reason;
      return result;
    }
    result.kind = GraphCase::Contradiction;
    result.note = "diameter 4, not Q-regular (" + qr.reason + "), parameters " + p.to_string();
    return result;
  }

  result.kind = GraphCase::Contradiction;
  result.note = "diameter exceeds 5: " + std::to_string(dt.diameter);
  return result;
}

}  // namespace arglab
