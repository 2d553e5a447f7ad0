#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "disnet/indices.hpp"
#include "disnet/numeric.hpp"
#include "disnet/rng.hpp"
#include "disnet/sampling.hpp"
#include "oracle.hpp"

using disnet::estimate_ade;
using disnet::estimate_adpl;
using disnet::EstimateKind;
using disnet::EstimateResult;
using disnet::Graph;
using disnet::IndexKind;
using disnet::per_source_contribution;
using disnet::required_sample_size;
using disnet::UnreachablePolicy;

namespace {
constexpr auto kSub = UnreachablePolicy::substitute_n;
}

TEST_CASE("per-source contributions are the per-vertex index scores") {
  const Graph g = oracle::random_connected(25, 0.2, 11);
  const auto dc = disnet::compute_index(g, IndexKind::discriminative_closeness, kSub);
  const auto de = disnet::compute_index(g, IndexKind::discriminative_eccentricity, kSub);
  disnet::SsspEngine engine(g);
  for (disnet::VertexId v = 0; v < g.vertex_count(); ++v) {
    CHECK(per_source_contribution(g, v, EstimateKind::adpl) == dc.scores[v]);
    CHECK(per_source_contribution(g, v, EstimateKind::ade) == de.scores[v]);
    CHECK(per_source_contribution(engine, v, EstimateKind::adpl) == dc.scores[v]);
  }
}

TEST_CASE("exhaustive estimates recover the exact aggregates") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = oracle::random_connected(15 + seed * 7, 0.25, seed + 500);
    const auto agg = disnet::compute_aggregates(g, kSub);
    const EstimateResult adpl = disnet::estimate_exhaustive(g, EstimateKind::adpl, kSub);
    const EstimateResult ade = disnet::estimate_exhaustive(g, EstimateKind::ade, kSub);
    CHECK(adpl.samples_used == g.vertex_count());
    CHECK(adpl.estimate == doctest::Approx(agg.adpl).epsilon(1e-12));
    CHECK(ade.estimate == doctest::Approx(agg.ade).epsilon(1e-12));

    // Slot v of the exhaustive sweep is exactly the score of vertex v.
    const auto dc = disnet::compute_index(g, IndexKind::discriminative_closeness, kSub);
    CHECK(adpl.per_sample == dc.scores);
  }
}

TEST_CASE("sampled estimate is the compensated mean of its draws") {
  const Graph g = oracle::random_connected(30, 0.2, 9);
  const EstimateResult res = estimate_adpl(g, 64, 1234);
  REQUIRE(res.per_sample.size() == 64);
  CHECK(res.samples_used == 64);
  CHECK(res.seed == 1234);

  disnet::KahanSum sum;
  for (double b : res.per_sample) sum.add(b);
  CHECK(res.estimate == sum.value() / 64.0);

  // Draw t picks its source from a sub-seed of (seed, t), so each slot can be
  // reproduced independently.
  for (std::size_t t = 0; t < res.per_sample.size(); ++t) {
    disnet::SplitMix64 rng(disnet::substream_seed(1234, 1, t));
    const auto source = static_cast<disnet::VertexId>(rng.below(g.vertex_count()));
    CHECK(res.per_sample[t] == per_source_contribution(g, source, EstimateKind::adpl));
  }
}

TEST_CASE("estimates are reproducible and thread-count independent") {
  const Graph g = oracle::random_connected(40, 0.15, 21);
  const EstimateResult a = estimate_adpl(g, 100, 7, kSub, 1);
  const EstimateResult b = estimate_adpl(g, 100, 7, kSub, 4);
  const EstimateResult c = estimate_adpl(g, 100, 7, kSub, 4);
  CHECK(a.estimate == b.estimate);
  CHECK(a.per_sample == b.per_sample);
  CHECK(b.estimate == c.estimate);

  const EstimateResult other = estimate_adpl(g, 100, 8, kSub, 4);
  CHECK(a.per_sample != other.per_sample);
}

TEST_CASE("constant-score graphs estimate exactly for any sample count") {
  const Graph g = oracle::cycle_graph(4);
  for (std::size_t samples : {1u, 3u, 17u, 100u}) {
    CHECK(estimate_adpl(g, samples, samples * 31).estimate == 1.0);
  }
  // Cycle of five: every discriminative eccentricity is 2/4.
  const Graph c5 = oracle::cycle_graph(5);
  CHECK(estimate_ade(c5, 12, 5).estimate == 0.5);
}

TEST_CASE("per-sample values stay within the diameter bound") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Graph g = oracle::random_connected(22, 0.2, seed + 720);
    const double diameter = disnet::compute_aggregates(g, kSub).diameter;
    for (EstimateKind kind : {EstimateKind::adpl, EstimateKind::ade}) {
      const EstimateResult res = disnet::estimate_exhaustive(g, kind, kSub);
      for (double b : res.per_sample) {
        CHECK(b > 0.0);
        CHECK(b <= diameter);
      }
    }
  }
}

TEST_CASE("a seeded run at the prescribed sample size lands near the target") {
  const Graph g = oracle::random_connected(36, 0.18, 4242);
  const auto agg = disnet::compute_aggregates(g, kSub);
  const double eps = 0.15 * agg.diameter;
  const std::size_t t = required_sample_size(eps, 0.05, agg.diameter);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const EstimateResult res = estimate_adpl(g, t, seed);
    CHECK(std::abs(res.estimate - agg.adpl) <= eps);
  }
}

TEST_CASE("sample size formula") {
  // ln(2/0.05) * 2^2 / (2 * 0.1^2) = 737.78
  CHECK(required_sample_size(0.1, 0.05, 2.0) == 738);
  CHECK(required_sample_size(10.0, 0.5, 1.0) == 1);
  CHECK(required_sample_size(0.05, 0.05, 2.0) > required_sample_size(0.1, 0.05, 2.0));
  CHECK(required_sample_size(0.1, 0.01, 2.0) > required_sample_size(0.1, 0.05, 2.0));

  CHECK_THROWS_AS(required_sample_size(0.0, 0.05, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(required_sample_size(0.1, 0.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(required_sample_size(0.1, 1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(required_sample_size(0.1, 0.05, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(required_sample_size(1e-12, 0.05, 1e6), std::overflow_error);
}

TEST_CASE("degenerate estimation inputs are rejected") {
  const Graph g = oracle::path_graph(3);
  CHECK_THROWS_AS(estimate_adpl(g, 0, 1), std::invalid_argument);
  const Graph tiny = Graph::from_edges({"a"}, {}, false);
  CHECK_THROWS_AS(estimate_adpl(tiny, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(per_source_contribution(g, 9, EstimateKind::adpl), std::invalid_argument);
}
