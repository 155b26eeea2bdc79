#include <doctest.h>

#include "arglab/constructions.hpp"
#include "arglab/verifiers.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace arglab;
using fixtures::complete_bipartite;
using fixtures::complete_graph;
using fixtures::cycle_graph;

TEST_CASE("amply regular parameter extraction") {
  const ArCheck k33 = amply_regular_params(complete_bipartite(3, 3));
  REQUIRE(k33.ok());
  CHECK(*k33.params == ArParams{6, 3, 0, 3});

  const ArCheck q5 = amply_regular_params(hypercube(5));
  REQUIRE(q5.ok());
  CHECK(*q5.params == ArParams{32, 5, 0, 2});

  const ArCheck im7 = amply_regular_params(im_pipeline(7));
  REQUIRE(im7.ok());
  CHECK(*im7.params == ArParams{32, 7, 0, 3});

  CHECK(amply_regular_params(fixtures::path_graph(4)).failure == CheckFailure::NotRegular);
  CHECK(amply_regular_params(complete_graph(4)).failure == CheckFailure::DiameterTooSmall);
  CHECK(amply_regular_params(from_edges(4, {{0, 1}, {2, 3}})).failure ==
        CheckFailure::NotConnected);

  // mu witness: C4 plus a chord pattern is not amply regular
  const Graph bad = from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 3}});
  const ArCheck witnessed = amply_regular_params(bad);
  CHECK_FALSE(witnessed.ok());
  CHECK(witnessed.witness.x >= 0);
}

TEST_CASE("strongly regular parameter extraction") {
  const ArCheck p13 = strongly_regular_params(paley_graph(13));
  REQUIRE(p13.ok());
  CHECK(*p13.params == ArParams{13, 6, 2, 3});

  const ArCheck folded = strongly_regular_params(folded_graph(hypercube(5)));
  REQUIRE(folded.ok());
  CHECK(*folded.params == ArParams{16, 5, 0, 2});

  CHECK(strongly_regular_params(cycle_graph(6)).failure == CheckFailure::DiameterNotTwo);
  CHECK(strongly_regular_params(complete_graph(4)).failure == CheckFailure::DiameterNotTwo);
}

TEST_CASE("distance regular array extraction") {
  const DrCheck taylor = distance_regular_array(taylor_extension(paley_graph(5)));
  REQUIRE(taylor.ok());
  CHECK(taylor.array->to_string() == "{5,2,1;1,2,5}");

  const DrCheck q5 = distance_regular_array(hypercube(5));
  REQUIRE(q5.ok());
  CHECK(q5.array->to_string() == "{5,4,3,2,1;1,2,3,4,5}");
  CHECK(q5.array->a(1) == 0);

  const DrCheck kl = distance_regular_array(k2_box_lambda());
  CHECK_FALSE(kl.ok());
  CHECK(kl.failure == CheckFailure::NotDistanceRegular);
}

TEST_CASE("the pipeline graphs are amply regular but not distance regular") {
  const DrCheck dr = distance_regular_array(taylor_bd_pipeline(ConferenceKind::Paley, 5));
  CHECK_FALSE(dr.ok());  // c_3 differs between the two distance-3 cells
  CHECK(dr.failure == CheckFailure::NotDistanceRegular);
}

TEST_CASE("extraction consistency between arrays and amply parameters") {
  for (const Graph& g : {hypercube(5), taylor_extension(paley_graph(5)), lambda_14()}) {
    const DrCheck dr = distance_regular_array(g);
    REQUIRE(dr.ok());
    const ArCheck ar = amply_regular_params(g);
    REQUIRE(ar.ok());
    CHECK(ar.params->v == g.order());
    CHECK(ar.params->k == dr.array->b[0]);
    CHECK(ar.params->lambda == dr.array->a(1));
    CHECK(ar.params->mu == dr.array->c[1]);
  }
}

TEST_CASE("sesqui regularity") {
  const SesquiCheck k33 = is_sesqui_regular(complete_bipartite(3, 3));
  REQUIRE(k33.ok());
  CHECK(*k33.params == SesquiParams{6, 3, 3});

  const SesquiCheck lam = is_sesqui_regular(lambda_14());
  REQUIRE(lam.ok());
  CHECK(*lam.params == SesquiParams{14, 4, 2});

  const Graph k4_minus = from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(is_sesqui_regular(k4_minus).failure == CheckFailure::NotRegular);

  // sesqui but not amply: lambda varies on the 5-wheel-like fixture
  const Graph prism = from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                                     {0, 3}, {1, 4}, {2, 5}});
  const SesquiCheck pr = is_sesqui_regular(prism);
  REQUIRE(pr.ok());
  CHECK(*pr.params == SesquiParams{6, 3, 2});
}

TEST_CASE("zero-two graphs") {
  CHECK(is_02_graph(lambda_14()));
  CHECK(is_02_graph(hypercube(3)));
  CHECK_FALSE(is_02_graph(cycle_graph(5)));
}

TEST_CASE("expected quotient table") {
  const QuotientMatrix q5 = expected_quotient(5);
  CHECK(q5.cell_sizes == std::vector<int>{1, 5, 10, 5, 2, 1});
  CHECK(q5.entries[2] == std::vector<long long>{0, 2, 0, 2, 1, 0});

  const QuotientMatrix q7 = expected_quotient(7);
  CHECK(q7.entries[3] == std::vector<long long>{0, 0, 6, 0, 0, 1});

  for (long long k : {5LL, 7LL, 9LL, 11LL, 25LL}) {
    const QuotientMatrix q = expected_quotient(k);
    for (std::size_t i = 0; i < q.entries.size(); ++i) {
      long long row = 0;
      for (long long e : q.entries[i]) row += e;
      CHECK(row == k);
      for (std::size_t j = 0; j < q.entries.size(); ++j)
        CHECK(q.cell_sizes[i] * q.entries[i][j] == q.cell_sizes[j] * q.entries[j][i]);
    }
  }

  CHECK_THROWS_AS(expected_quotient(4), Error);
  CHECK_THROWS_AS(expected_quotient(3), Error);
}

TEST_CASE("q-regularity check") {
  const QRegularCheck p5 = q_regular_check(taylor_bd_pipeline(ConferenceKind::Paley, 5));
  REQUIRE(p5.ok());
  CHECK(*p5.quotient == expected_quotient(5));

  const QRegularCheck im7 = q_regular_check(im_pipeline(7));
  REQUIRE(im7.ok());
  CHECK(*im7.quotient == expected_quotient(7));

  const QRegularCheck kl = q_regular_check(k2_box_lambda());
  CHECK_FALSE(kl.ok());
  CHECK(kl.failure == CheckFailure::NoAntipode);
  CHECK(kl.gamma4_count == 3);

  const QRegularCheck q5 = q_regular_check(hypercube(5));
  CHECK_FALSE(q5.ok());
  CHECK(q5.failure == CheckFailure::NotApplicable);
}

TEST_CASE("q-regularity success implies a unique antipode everywhere") {
  for (const Graph& g : {taylor_bd_pipeline(ConferenceKind::Paley, 5), im_pipeline(7)}) {
    REQUIRE(q_regular_check(g).ok());
    const DistanceTable dt = distances(g);
    for (int x = 0; x < g.order(); ++x) CHECK(dt.sphere(x, 4).size() == 1);
  }
}

TEST_CASE("feasibility diagnostics") {
  const FeasibilityReport cube = feasibility_diagnostics(ArParams{32, 5, 0, 2}, 5);
  CHECK(cube.findings.size() == 2);
  CHECK(cube.all_pass());

  const FeasibilityReport lam_violation = feasibility_diagnostics(ArParams{40, 9, 6, 3}, 3);
  CHECK_FALSE(lam_violation.all_pass());
  CHECK(lam_violation.findings[0].bound == "b1_lower_bound");
  CHECK(lam_violation.findings[0].violated);

  const FeasibilityReport mu_violation = feasibility_diagnostics(ArParams{40, 9, 0, 5}, 4);
  CHECK_FALSE(mu_violation.all_pass());
  bool found = false;
  for (const auto& f : mu_violation.findings)
    if (f.bound == "mu_upper_bound") {
      CHECK(f.violated);
      found = true;
    }
  CHECK(found);

  CHECK(feasibility_diagnostics(ArParams{10, 3, 0, 1}, 2).findings.empty());
}

TEST_CASE("classification trichotomy") {
  const Classification cube = classify(hypercube(5));
  CHECK(cube.kind == GraphCase::FiveCube);
  REQUIRE(cube.folded_params.has_value());
  CHECK(*cube.folded_params == ArParams{16, 5, 0, 2});

  const Classification kl = classify(k2_box_lambda());
  CHECK(kl.kind == GraphCase::K2BoxLambda);
  CHECK(kl.params == ArParams{28, 5, 0, 2});

  const Classification im7 = classify(im_pipeline(7));
  CHECK(im7.kind == GraphCase::GddIncidence);
  REQUIRE(im7.design.has_value());
  CHECK(im7.design->gdd.params == GddParams{2, 8, 7, 0, 3});

  try {
    classify(cycle_graph(5));
    FAIL("expected NotApplicable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotApplicable);
  }
  CHECK_THROWS_AS(classify(hypercube(4)), Error);  // mu = 2, k = 4 even
}
