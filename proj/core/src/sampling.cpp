#include "disnet/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "disnet/numeric.hpp"
#include "disnet/parallel.hpp"
#include "disnet/rng.hpp"
#include "index_terms.hpp"

namespace disnet {

namespace {

// Stream id separating source draws from other seeded consumers.
constexpr std::uint64_t kSourceDrawStream = 1;

double contribution(const SsspResult& r, EstimateKind kind, UnreachablePolicy policy,
                    std::size_t n) {
  const double norm = 1.0 / static_cast<double>(n - 1);
  const double acc =
      kind == EstimateKind::adpl
          ? detail::accumulate_source(r, detail::Reduce::sum, detail::DiscriminativeTerm{},
                                      policy, n)
          : detail::accumulate_source(r, detail::Reduce::max, detail::DiscriminativeTerm{},
                                      policy, n);
  return acc * norm;
}

EstimateResult run_estimate(const Graph& g, EstimateKind kind, std::size_t samples,
                            std::uint64_t seed, UnreachablePolicy policy, std::size_t threads,
                            bool exhaustive) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("estimation requires at least 2 vertices");
  if (!exhaustive && samples == 0)
    throw std::invalid_argument("sample count must be at least 1");

  EstimateResult res;
  res.samples_used = exhaustive ? n : samples;
  res.seed = seed;
  res.per_sample.resize(res.samples_used);

  // Sample t draws its source from a sub-seed of (seed, t): reruns and any
  // worker count see the same sources in the same slots.
  parallel_for_indexed(
      res.samples_used, threads, [&g] { return SsspEngine(g); },
      [&](SsspEngine& engine, std::size_t t) {
        VertexId source;
        if (exhaustive) {
          source = static_cast<VertexId>(t);
        } else {
          SplitMix64 rng(substream_seed(seed, kSourceDrawStream, t));
          source = static_cast<VertexId>(rng.below(n));
        }
        res.per_sample[t] = contribution(engine.run(source), kind, policy, n);
      });

  KahanSum sum;
  for (double b : res.per_sample) sum.add(b);
  res.estimate = sum.value() / static_cast<double>(res.samples_used);
  return res;
}

}  // namespace

double per_source_contribution(SsspEngine& engine, VertexId v, EstimateKind kind,
                               UnreachablePolicy policy) {
  const SsspResult& r = engine.run(v);
  return contribution(r, kind, policy, r.dist.size());
}

double per_source_contribution(const Graph& g, VertexId v, EstimateKind kind,
                               UnreachablePolicy policy) {
  if (g.vertex_count() < 2)
    throw std::invalid_argument("estimation requires at least 2 vertices");
  if (v >= g.vertex_count()) throw std::invalid_argument("source vertex out of range");
  SsspEngine engine(g);
  return per_source_contribution(engine, v, kind, policy);
}

EstimateResult estimate_adpl(const Graph& g, std::size_t samples, std::uint64_t seed,
                             UnreachablePolicy policy, std::size_t threads) {
  return run_estimate(g, EstimateKind::adpl, samples, seed, policy, threads, false);
}

EstimateResult estimate_ade(const Graph& g, std::size_t samples, std::uint64_t seed,
                            UnreachablePolicy policy, std::size_t threads) {
  return run_estimate(g, EstimateKind::ade, samples, seed, policy, threads, false);
}

EstimateResult estimate_exhaustive(const Graph& g, EstimateKind kind,
                                   UnreachablePolicy policy, std::size_t threads) {
  return run_estimate(g, kind, 0, 0, policy, threads, true);
}

std::size_t required_sample_size(double epsilon, double delta, double diameter_bound) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon))
    throw std::invalid_argument("epsilon must be positive");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("delta must be in (0, 1)");
  if (!(diameter_bound > 0.0) || !std::isfinite(diameter_bound))
    throw std::invalid_argument("diameter_bound must be positive");

  const double t = std::log(2.0 / delta) * diameter_bound * diameter_bound /
                   (2.0 * epsilon * epsilon);
  if (!(t < 9.0e18)) throw std::overflow_error("required sample size does not fit");
  const double up = std::ceil(t);
  return up < 1.0 ? 1 : static_cast<std::size_t>(up);
}

}  // namespace disnet
