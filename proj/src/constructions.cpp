#include "arglab/constructions.hpp"

#include <algorithm>

namespace arglab {

namespace {

void check_order_guard(long long q, long long max_q) {
  if (q > max_q)
    throw Error(ErrorKind::OrderLimitExceeded,
                "q = " + std::to_string(q) + " exceeds the configured limit " +
                    std::to_string(max_q));
}

// All nonzero differences of a Cayley-type graph on the field, with the
// connection-set predicate evaluated once per difference encoding.
template <typename Predicate>
Graph cayley_on_field(const Field& f, Predicate&& connects) {
  const long long q = f.order().q;
  std::vector<char> in_set(q, 0);
  for (long long e = 1; e < q; ++e)
    in_set[e] = connects(f.from_encoding(e)) ? 1 : 0;
  Graph g(static_cast<int>(q));
  for (long long a = 0; a < q; ++a) {
    const FieldElement ea = f.from_encoding(a);
    for (long long b = a + 1; b < q; ++b) {
      const FieldElement diff = f.sub(f.from_encoding(b), ea);
      if (in_set[f.encoding(diff)]) g.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return g;
}

}  // namespace

Graph paley_graph(long long q, long long max_q) {
  check_order_guard(q, max_q);
  const PrimePower pp = PrimePower::from_order(q);
  if (q % 4 != 1)
    throw Error(ErrorKind::CongruenceError, "Paley graph needs q = 1 mod 4, got " + std::to_string(q));
  const Field f(pp);
  return cayley_on_field(f, [&](const FieldElement& d) { return is_square(f, d); });
}

Graph peisert_graph(long long q, long long max_q) {
  check_order_guard(q, max_q);
  const PrimePower pp = PrimePower::from_order(q);
  if (q < 5 || pp.p % 4 != 3 || pp.r % 2 != 0)
    throw Error(ErrorKind::CongruenceError,
                "Peisert graph needs q = p^r >= 5 with p = 3 mod 4 and r even, got " +
                    std::to_string(q));
  const Field f(pp);
  return cayley_on_field(f, [&](const FieldElement& d) {
    const int c = quartic_class(f, d);
    return c == 0 || c == 1;
  });
}

Digraph paley_digraph(long long q, long long max_q) {
  check_order_guard(q, max_q);
  const PrimePower pp = PrimePower::from_order(q);
  if (q < 7 || q % 4 != 3)
    throw Error(ErrorKind::CongruenceError,
                "Paley digraph needs q >= 7 with q = 3 mod 4, got " + std::to_string(q));
  const Field f(pp);
  std::vector<char> square(q, 0);
  for (long long e = 1; e < q; ++e) square[e] = is_square(f, f.from_encoding(e)) ? 1 : 0;
  Digraph d(static_cast<int>(q));
  for (long long a = 0; a < q; ++a) {
    const FieldElement ea = f.from_encoding(a);
    for (long long b = 0; b < q; ++b) {
      if (a == b) continue;
      if (square[f.encoding(f.sub(f.from_encoding(b), ea))])
        d.add_arc(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return d;
}

TwoClassScheme paley_2class_scheme(long long q, long long max_q) {
  const Digraph d = paley_digraph(q, max_q);
  TwoClassScheme s;
  s.n = d.order();
  s.a1 = IntMatrix(s.n, s.n);
  for (auto [a, b] : d.arcs()) s.a1.at(a, b) = 1;
  s.a2 = s.a1.transpose();
  return s;
}

CMatrixSet im_c_matrices(const TwoClassScheme& s) {
  const int n = s.n;
  if (n < 5 || n % 2 == 0)
    throw Error(ErrorKind::InvalidOrder, "scheme order must be odd and >= 5, got " + std::to_string(n));
  const int order = 2 * (n + 1);
  CMatrixSet c;
  c.n = n;
  c.c0 = IntMatrix::identity(order);
  c.c1 = IntMatrix(order, order);
  // Block rows [0 | 1..n | n+1..2n | 2n+1]:
  //   row 0:        [0  1   0   0]
  //   rows 1..n:    [0  A1  A2  1^T]
  //   rows n+1..2n: [1^T A2  A1  0]
  //   row 2n+1:     [0  0   1   0]
  for (int j = 1; j <= n; ++j) c.c1.at(0, j) = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      c.c1.at(i, j) = s.a1.at(i - 1, j - 1);
      c.c1.at(i, n + j) = s.a2.at(i - 1, j - 1);
      c.c1.at(n + i, j) = s.a2.at(i - 1, j - 1);
      c.c1.at(n + i, n + j) = s.a1.at(i - 1, j - 1);
    }
    c.c1.at(i, 2 * n + 1) = 1;
    c.c1.at(n + i, 0) = 1;
    c.c1.at(2 * n + 1, n + i) = 1;
  }
  c.c2 = c.c1.transpose();
  c.c3 = IntMatrix::ones(order, order) + c.c0.scaled(-1) + c.c1.scaled(-1) + c.c2.scaled(-1);
  return c;
}

Graph graph_from_biadjacency(const IntMatrix& b) {
  Graph g(b.rows() + b.cols());
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c)
      if (b.at(r, c) != 0) g.add_edge(r, b.rows() + c);
  return g;
}

Graph im_pipeline(long long q, long long max_q) {
  return graph_from_biadjacency(im_c_matrices(paley_2class_scheme(q, max_q)).c1);
}

Graph taylor_bd_pipeline(ConferenceKind kind, long long q, long long max_q) {
  const Graph base = (kind == ConferenceKind::Paley) ? paley_graph(q, max_q)
                                                     : peisert_graph(q, max_q);
  return bipartite_double(taylor_extension(base));
}

IncidenceStructure lambda_design() {
  IncidenceStructure s;
  s.points = 7;
  for (int i = 0; i < 7; ++i) {
    std::vector<int> block;
    for (int p = 0; p < 7; ++p) {
      const int d = (p - i + 7) % 7;
      if (d != 1 && d != 2 && d != 4) block.push_back(p);
    }
    s.blocks.push_back(std::move(block));
  }
  return s;
}

Graph lambda_14() { return incidence_graph(lambda_design()); }

Graph k2_box_lambda() {
  Graph k2(2);
  k2.add_edge(0, 1);
  return cartesian_product(k2, lambda_14());
}

}  // namespace arglab
