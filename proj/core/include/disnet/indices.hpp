#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "disnet/graph.hpp"
#include "disnet/sssp.hpp"

namespace disnet {

enum class IndexKind {
  closeness,
  discriminative_closeness,
  harmonic_closeness,
  discriminative_harmonic_closeness,
  eccentricity,
  discriminative_eccentricity,
  generalized,
};

/// Per-vertex scores of one index, aligned with dense vertex ids.
struct IndexVector {
  IndexKind kind = IndexKind::closeness;
  UnreachablePolicy policy = UnreachablePolicy::substitute_n;
  bool normalized = true;  // 1/(n-1) factor applied
  std::vector<double> scores;
};

struct GraphAggregates {
  double apl = 0;  // average path length
  double adpl = 0; // average discriminative path length
  double ae = 0;   // average eccentricity
  double ade = 0;  // average discriminative eccentricity
  double diameter = 0;
  double discriminative_diameter = 0;
  double radius = 0;
  double discriminative_radius = 0;
};

/// Policy a kind uses when none is given: harmonic kinds drop unreachable
/// pairs, the others substitute d = n, sigma = 1.
UnreachablePolicy default_policy(IndexKind kind);

/// Per-vertex index scores via one shortest-path sweep per vertex. Scores are
/// normalized by 1/(n-1) unless `normalized` is false. Sweeps run in parallel
/// over sources (threads = 0 picks the hardware count; the DISNET_THREADS
/// environment variable caps it) and results do not depend on the worker
/// count. Requires n >= 2; IndexKind::generalized needs the overload below.
IndexVector compute_index(const Graph& g, IndexKind kind, UnreachablePolicy policy,
                          std::size_t threads = 0, bool normalized = true);
IndexVector compute_index(const Graph& g, IndexKind kind, std::size_t threads = 0);

/// Generalized closeness: score(v) = 1/(n-1) * sum_u f(d(v,u)) * g(sigma(v,u)).
/// With f = identity and g = reciprocal this reproduces
/// compute_index(discriminative_closeness) bit for bit. Unreachable pairs
/// contribute f(n) * g(1) under substitute_n and nothing under harmonic_zero.
/// f and g must return finite values on every distance/count they see.
IndexVector compute_generalized_closeness(const Graph& g,
                                          const std::function<double(double)>& f,
                                          const std::function<double(double)>& g_fn,
                                          UnreachablePolicy policy,
                                          std::size_t threads = 0);

/// All eight aggregate indices from a single sweep. The four averages are
/// means over vertices of the corresponding per-vertex scores; the diameter
/// and radius rows are unnormalized max/min eccentricities.
GraphAggregates compute_aggregates(const Graph& g,
                                   UnreachablePolicy policy = UnreachablePolicy::substitute_n,
                                   std::size_t threads = 0);

struct CenterPeriphery {
  std::vector<VertexId> center;     // minimum (discriminative) eccentricity
  std::vector<VertexId> periphery;  // maximum (discriminative) eccentricity
};

/// Center and periphery vertex sets, ascending by id. `discriminative` picks
/// discriminative eccentricity instead of plain eccentricity.
CenterPeriphery center_periphery(const Graph& g, bool discriminative,
                                 UnreachablePolicy policy = UnreachablePolicy::substitute_n,
                                 std::size_t threads = 0);

/// Percentage of distinct score values after rounding to `significant_digits`
/// significant decimal digits: 100 * distinct / n.
double discriminability(const IndexVector& index, int significant_digits = 9);

}  // namespace disnet
