#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "disnet/graph.hpp"

namespace disnet {

/// How pairs with no connecting path enter a score.
///   substitute_n:  treat the pair as if d = n and sigma = 1
///   harmonic_zero: the pair contributes nothing
enum class UnreachablePolicy { substitute_n, harmonic_zero };

struct SsspResult {
  VertexId source = 0;
  std::vector<double> dist;             // +inf when unreachable
  std::vector<double> sigma;            // shortest-path counts; 0 at the source
  std::vector<std::uint8_t> reachable;  // 1 when a path exists (source included)
};

/// Single-source shortest paths with path counting: BFS on unweighted graphs,
/// Dijkstra on weighted ones. The engine is owned by one worker and reuses
/// its buffers across runs, so a sweep over all sources does not allocate per
/// call. Counts are exact as long as they stay below 2^53.
class SsspEngine {
 public:
  /// Two weighted path lengths within this absolute tolerance tie.
  static constexpr double kTieTolerance = 1e-12;

  explicit SsspEngine(const Graph& g);

  /// Runs from `source` and returns the engine-owned result. The reference
  /// stays valid until the next run() on this engine.
  const SsspResult& run(VertexId source);

  const SsspResult& result() const { return result_; }

 private:
  void run_bfs(VertexId source);
  void run_dijkstra(VertexId source);

  const Graph* g_;
  SsspResult result_;
  std::vector<VertexId> queue_;                     // BFS worklist
  std::vector<std::pair<double, VertexId>> heap_;   // Dijkstra worklist
  std::vector<std::uint8_t> settled_;
};

/// One-shot convenience wrapper around SsspEngine.
SsspResult shortest_path_dag(const Graph& g, VertexId source);

/// Discriminative distance d/sigma of one pair, with (d, sigma) taken from an
/// SsspResult row. Pairs with sigma == 0 are unreachable and resolve through
/// `policy` (n is the vertex count of the graph). The source row itself
/// (d == 0) has no discriminative distance and must not be passed in.
inline double discriminative_distance(double d, double sigma, std::size_t n,
                                      UnreachablePolicy policy) {
  if (sigma <= 0.0)
    return policy == UnreachablePolicy::substitute_n ? static_cast<double>(n) : 0.0;
  return d * (1.0 / sigma);
}

inline constexpr double kInfiniteDistance = std::numeric_limits<double>::infinity();

}  // namespace disnet
