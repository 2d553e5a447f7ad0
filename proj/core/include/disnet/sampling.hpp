#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "disnet/graph.hpp"
#include "disnet/indices.hpp"
#include "disnet/sssp.hpp"

namespace disnet {

enum class EstimateKind { adpl, ade };

struct EstimateResult {
  double estimate = 0;
  std::size_t samples_used = 0;
  std::uint64_t seed = 0;
  std::vector<double> per_sample;  // one contribution per draw, in draw order
};

/// Contribution of source v to the aggregate: 1/(n-1) * sum_u dd(v,u) for
/// adpl, 1/(n-1) * max_u dd(v,u) for ade. Equals the per-vertex DC / DE score
/// of v exactly.
double per_source_contribution(const Graph& g, VertexId v, EstimateKind kind,
                               UnreachablePolicy policy = UnreachablePolicy::substitute_n);
double per_source_contribution(SsspEngine& engine, VertexId v, EstimateKind kind,
                               UnreachablePolicy policy = UnreachablePolicy::substitute_n);

/// Unbiased sampled estimate: draws `samples` source vertices uniformly with
/// replacement and averages their contributions (Kahan-compensated, in draw
/// order). Draw t is generated from a deterministic sub-seed of (seed, t), so
/// the result depends only on (graph, samples, seed), never on the worker
/// count. Requires samples >= 1 and n >= 2.
EstimateResult estimate_adpl(const Graph& g, std::size_t samples, std::uint64_t seed,
                             UnreachablePolicy policy = UnreachablePolicy::substitute_n,
                             std::size_t threads = 0);
EstimateResult estimate_ade(const Graph& g, std::size_t samples, std::uint64_t seed,
                            UnreachablePolicy policy = UnreachablePolicy::substitute_n,
                            std::size_t threads = 0);

/// Sweeps every vertex exactly once instead of sampling; the estimate then
/// equals the exact aggregate value.
EstimateResult estimate_exhaustive(const Graph& g, EstimateKind kind,
                                   UnreachablePolicy policy = UnreachablePolicy::substitute_n,
                                   std::size_t threads = 0);

/// Hoeffding sample size: the smallest T with
/// T >= ln(2/delta) * diameter_bound^2 / (2 * epsilon^2), which caps the
/// probability of an absolute error above epsilon at delta when every
/// per-sample contribution lies in (0, diameter_bound]. Requires epsilon > 0,
/// delta in (0,1), diameter_bound > 0.
std::size_t required_sample_size(double epsilon, double delta, double diameter_bound);

}  // namespace disnet
