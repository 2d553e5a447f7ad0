#pragma once

// Seeded generator for benchmark inputs: a random spanning tree plus extra
// random edges, so every instance is connected and reproducible.

#include <string>
#include <vector>

#include "disnet/graph.hpp"
#include "disnet/rng.hpp"

namespace bench {

inline disnet::Graph random_graph(std::size_t n, std::size_t avg_degree, std::uint64_t seed,
                                  bool weighted = false) {
  disnet::SplitMix64 rng(seed);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);

  std::vector<disnet::Edge> edges;
  edges.reserve(n + n * avg_degree / 2);
  for (std::size_t v = 1; v < n; ++v)
    edges.push_back({static_cast<disnet::VertexId>(rng.below(v)),
                     static_cast<disnet::VertexId>(v), 1.0 + rng.unit()});
  for (std::size_t i = 0; i < n * avg_degree / 2; ++i) {
    const auto u = static_cast<disnet::VertexId>(rng.below(n));
    const auto v = static_cast<disnet::VertexId>(rng.below(n));
    if (u == v) continue;
    edges.push_back({u, v, 1.0 + rng.unit()});
  }
  return disnet::Graph::from_edges(std::move(labels), std::move(edges), weighted);
}

}  // namespace bench
