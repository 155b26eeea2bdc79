#include "arglab/schemes.hpp"

#include <array>

#include <json.hpp>

#include "arglab/verifiers.hpp"

namespace arglab {

namespace {

using ordered_json = nlohmann::ordered_json;

// p[i][j][k] table plus the position -> relation map; the relations are
// assumed to satisfy axioms (i) and (ii) already.
struct PTable {
  bool ok = true;
  SchemeWitness witness;
  std::vector<std::vector<std::vector<long long>>> p;
};

PTable compute_p(const std::vector<IntMatrix>& relations, const std::vector<std::vector<int>>& rel_at) {
  const int m = static_cast<int>(relations.size());
  const int n = relations[0].rows();
  PTable out;
  out.p.assign(m, std::vector<std::vector<long long>>(m, std::vector<long long>(m, 0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const IntMatrix product = relations[i] * relations[j];
      std::vector<long long> value(m, -1);
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          const int k = rel_at[r][c];
          if (value[k] == -1) {
            value[k] = product.at(r, c);
          } else if (value[k] != product.at(r, c)) {
            out.ok = false;
            out.witness = SchemeWitness{4, i, j, r, c};
            return out;
          }
        }
      }
      for (int k = 0; k < m; ++k) out.p[i][j][k] = std::max(value[k], 0LL);
    }
  }
  return out;
}

}  // namespace

SchemeCheck verify_scheme(const std::vector<IntMatrix>& relations) {
  if (relations.empty())
    throw Error(ErrorKind::MalformedInstance, "no relation matrices");
  const int n = relations[0].rows();
  for (const auto& f : relations)
    if (f.rows() != n || f.cols() != n || !f.is_zero_one())
      throw Error(ErrorKind::MalformedInstance, "relations must be square 0/1 matrices of equal order");

  SchemeCheck out;

  // (i) F0 = I
  const IntMatrix identity = IntMatrix::identity(n);
  if (relations[0] != identity) {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (relations[0].at(r, c) != identity.at(r, c)) {
          out.witness = SchemeWitness{1, 0, -1, r, c};
          return out;
        }
  }

  // (ii) sum = J; record which relation covers each position
  std::vector<std::vector<int>> rel_at(n, std::vector<int>(n, -1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      int owner = -1;
      long long total = 0;
      for (std::size_t i = 0; i < relations.size(); ++i) {
        if (relations[i].at(r, c) != 0) {
          owner = static_cast<int>(i);
          total += relations[i].at(r, c);
        }
      }
      if (total != 1) {
        out.witness = SchemeWitness{2, -1, -1, r, c};
        return out;
      }
      rel_at[r][c] = owner;
    }
  }

  // (iii) transpose closure
  for (std::size_t i = 0; i < relations.size(); ++i) {
    const IntMatrix t = relations[i].transpose();
    bool found = false;
    for (const auto& f : relations)
      if (f == t) {
        found = true;
        break;
      }
    if (!found) {
      out.witness = SchemeWitness{3, static_cast<int>(i), -1, -1, -1};
      return out;
    }
  }

  // (iv) products lie in the span
  const PTable table = compute_p(relations, rel_at);
  if (!table.ok) {
    out.witness = table.witness;
    return out;
  }

  AssociationScheme scheme;
  scheme.order = n;
  scheme.relations = relations;
  scheme.symmetric = true;
  for (const auto& f : relations)
    if (!f.is_symmetric()) scheme.symmetric = false;
  scheme.commutative = true;
  const int m = static_cast<int>(relations.size());
  for (int i = 0; i < m && scheme.commutative; ++i)
    for (int j = i + 1; j < m && scheme.commutative; ++j)
      if (table.p[i][j] != table.p[j][i]) scheme.commutative = false;
  out.scheme = std::move(scheme);
  return out;
}

IntersectionNumbers intersection_numbers(const AssociationScheme& s) {
  const int n = s.order;
  std::vector<std::vector<int>> rel_at(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < s.relations.size(); ++i)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (s.relations[i].at(r, c) != 0) rel_at[r][c] = static_cast<int>(i);
  const PTable table = compute_p(s.relations, rel_at);
  if (!table.ok)
    throw Error(ErrorKind::MalformedInstance, "relations do not form a scheme");
  return IntersectionNumbers{s.classes(), table.p};
}

std::vector<long long> relation_valencies(const AssociationScheme& s) {
  std::vector<long long> out;
  for (const auto& f : s.relations) out.push_back(f.row_sum(0));
  return out;
}

bool verify_c1c2_identity(const CMatrixSet& c) {
  const long long n = c.n;
  const IntMatrix rhs = c.c0.scaled(n) + (c.c1 + c.c2).scaled((n - 1) / 2);
  return c.c1 * c.c2 == rhs && c.c2 * c.c1 == rhs;
}

AssociationScheme scheme_from_q_regular_graph(const Graph& g) {
  const QRegularCheck qr = q_regular_check(g);
  if (!qr.ok()) throw Error(ErrorKind::NotApplicable, "Q-regularity fails: " + qr.reason);
  const DistanceTable dt = distances(g);
  const std::vector<int> antipode = antipode_map(g);
  const long long k = g.degree(0);
  const int n = g.order();

  static constexpr std::array<std::pair<int, int>, 6> kSignatures = {
      {{0, 4}, {1, 3}, {2, 2}, {3, 1}, {3, 3}, {4, 0}}};
  std::vector<IntMatrix> relations(6, IntMatrix(n, n));
  for (int x = 0; x < n; ++x) {
    const int xp = antipode[x];
    for (int y = 0; y < n; ++y) {
      const std::pair<int, int> sig{dt.at(x, y), dt.at(xp, y)};
      bool placed = false;
      for (std::size_t i = 0; i < kSignatures.size(); ++i) {
        if (sig == kSignatures[i]) {
          relations[i].at(x, y) = 1;
          placed = true;
          break;
        }
      }
      if (!placed)
        throw Error(ErrorKind::MalformedInstance,
                    "pair (" + std::to_string(x) + "," + std::to_string(y) +
                        ") has signature (" + std::to_string(sig.first) + "," +
                        std::to_string(sig.second) + ")");
    }
  }

  const SchemeCheck check = verify_scheme(relations);
  if (!check.ok())
    throw Error(ErrorKind::MalformedInstance,
                "signature relations fail scheme axiom " + std::to_string(check.witness.axiom));
  if (!check.scheme->symmetric || check.scheme->classes() != 5)
    throw Error(ErrorKind::MalformedInstance, "expected a symmetric scheme with 5 classes");

  // Distribution diagram with respect to R1 must match the pinned quotient.
  const EquitableCheck eq = equitable_check(g, signature_partition(g, 0, dt, antipode));
  if (!eq.ok() || *eq.quotient != expected_quotient(k))
    throw Error(ErrorKind::MalformedInstance, "scheme diagram deviates from the expected quotient");

  return *check.scheme;
}

std::string scheme_report_json(const AssociationScheme& s) {
  ordered_json doc;
  doc["classes"] = s.classes();
  doc["symmetric"] = s.symmetric;
  doc["valencies"] = relation_valencies(s);
  const IntersectionNumbers numbers = intersection_numbers(s);
  doc["p"] = numbers.p;
  return doc.dump();
}

}  // namespace arglab
