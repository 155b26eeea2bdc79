#include <doctest.h>

#include <gmpxx.h>

#include "arglab/constructions.hpp"
#include "arglab/spectrum.hpp"
#include "support/fixtures.hpp"

using namespace arglab;
using fixtures::complete_graph;
using fixtures::cycle_graph;

namespace {

// Exact evaluation of the polynomial at the adjacency matrix.
bool annihilates(const std::vector<mpz_class>& coeffs, const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<mpz_class>> accumulated(n, std::vector<mpz_class>(n, 0));
  std::vector<std::vector<mpz_class>> power(n, std::vector<mpz_class>(n, 0));
  for (int i = 0; i < n; ++i) power[i][i] = 1;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) accumulated[r][c] += coeffs[d] * power[r][c];
    if (d + 1 < coeffs.size()) {
      std::vector<std::vector<mpz_class>> next(n, std::vector<mpz_class>(n, 0));
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          for (int w : g.neighbors(c)) next[r][c] += power[r][w];
      power = std::move(next);
    }
  }
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (accumulated[r][c] != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("distinct eigenvalue counts") {
  CHECK(distinct_eigenvalue_count(hypercube(5)) == 6);
  CHECK(distinct_eigenvalue_count(taylor_bd_pipeline(ConferenceKind::Paley, 5)) == 6);
  CHECK(distinct_eigenvalue_count(complete_graph(3)) == 2);
  CHECK(distinct_eigenvalue_count(complete_graph(6)) == 2);
  CHECK(distinct_eigenvalue_count(complete_graph(1)) == 1);
}

TEST_CASE("the 5-cube spectrum via its known factorization") {
  // spectrum of the m-cube is {m - 2i}: product of (x - theta) over the six
  // values {5,3,1,-1,-3,-5} must annihilate the adjacency matrix
  std::vector<mpz_class> poly{1};
  for (int theta : {5, 3, 1, -1, -3, -5}) {
    std::vector<mpz_class> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= theta * poly[i];
    }
    poly = std::move(next);
  }
  CHECK(annihilates(poly, hypercube(5)));
  // together with count >= diameter + 1 = 6 this pins the count at exactly 6
  CHECK(distinct_eigenvalue_count(hypercube(5)) == 6);
}

TEST_CASE("minimal polynomial annihilates the adjacency matrix") {
  for (const Graph& g : {complete_graph(3), cycle_graph(6), hypercube(3), hypercube(4),
                         lambda_14(), taylor_bd_pipeline(ConferenceKind::Paley, 5),
                         im_pipeline(7), hypercube(5)}) {
    const auto poly = minimal_polynomial(g);
    CHECK(poly.back() == 1);
    CHECK(annihilates(poly, g));
    // no smaller-degree tail annihilates: drop the leading term and the rest
    // cannot be monic of lower degree unless the matrix satisfied it, which
    // the elimination would have caught earlier
  }
}

TEST_CASE("count is at least diameter plus one on connected fixtures") {
  for (const Graph& g : {cycle_graph(6), hypercube(3), hypercube(5), lambda_14(),
                         k2_box_lambda(), paley_graph(13),
                         taylor_bd_pipeline(ConferenceKind::Paley, 5), im_pipeline(7)}) {
    const DistanceTable dt = distances(g);
    REQUIRE(dt.connected);
    CHECK(distinct_eigenvalue_count(g) >= dt.diameter + 1);
  }
}

TEST_CASE("srg eigenvalue pairs") {
  const SrgEigenvalues clebsch_like = srg_eigenvalues(ArParams{16, 10, 6, 6});
  CHECK(clebsch_like.integral);
  CHECK(clebsch_like.theta1 == 2);
  CHECK(clebsch_like.theta2 == -2);

  const SrgEigenvalues folded = srg_eigenvalues(ArParams{16, 5, 0, 2});
  CHECK(folded.integral);
  CHECK(folded.theta1 == 1);   // x^2 + 2x - 3 = (x + 3)(x - 1)
  CHECK(folded.theta2 == -3);

  // conference parameters give the surd pair (-1 +- sqrt(q))/2
  const SrgEigenvalues conf = srg_eigenvalues(ArParams{13, 6, 2, 3});
  CHECK(conf.s == -1);
  CHECK(conf.disc == 13);
  CHECK_FALSE(conf.integral);

  const SrgEigenvalues p9 = srg_eigenvalues(ArParams{9, 4, 1, 2});
  CHECK(p9.s == -1);
  CHECK(p9.disc == 9);
  CHECK(p9.integral);
  CHECK(p9.theta1 == 1);
  CHECK(p9.theta2 == -2);

  CHECK_THROWS_AS(srg_eigenvalues(ArParams{5, 3, 3, 9}), Error);
}

TEST_CASE("integral eigenvalues satisfy the srg quadratic exactly") {
  for (const ArParams& p : {ArParams{16, 10, 6, 6}, ArParams{16, 5, 0, 2},
                            ArParams{9, 4, 1, 2}, ArParams{32, 5, 0, 2}}) {
    const SrgEigenvalues e = srg_eigenvalues(p);
    if (!e.integral) continue;
    for (long long theta : {e.theta1, e.theta2})
      CHECK(theta * theta - (p.lambda - p.mu) * theta - (p.k - p.mu) == 0);
  }
}
