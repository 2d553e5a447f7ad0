#include "disnet/sssp.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace disnet {

SsspEngine::SsspEngine(const Graph& g) : g_(&g) {
  const std::size_t n = g.vertex_count();
  result_.dist.resize(n);
  result_.sigma.resize(n);
  result_.reachable.resize(n);
  if (!g.weighted()) {
    queue_.resize(n);
  } else {
    settled_.resize(n);
  }
}

const SsspResult& SsspEngine::run(VertexId source) {
  assert(source < g_->vertex_count());
  result_.source = source;
  std::fill(result_.dist.begin(), result_.dist.end(), kInfiniteDistance);
  std::fill(result_.sigma.begin(), result_.sigma.end(), 0.0);
  std::fill(result_.reachable.begin(), result_.reachable.end(), 0);

  if (g_->weighted())
    run_dijkstra(source);
  else
    run_bfs(source);

  // By definition there are no shortest paths from a vertex to itself.
  result_.sigma[source] = 0.0;
  return result_;
}

void SsspEngine::run_bfs(VertexId source) {
  auto& dist = result_.dist;
  auto& sigma = result_.sigma;
  auto& reachable = result_.reachable;

  dist[source] = 0.0;
  sigma[source] = 1.0;
  reachable[source] = 1;
  queue_[0] = source;
  std::size_t head = 0, tail = 1;

  while (head < tail) {
    const VertexId v = queue_[head++];
    const double next = dist[v] + 1.0;
    for (VertexId w : g_->neighbors(v)) {
      if (!reachable[w]) {
        reachable[w] = 1;
        dist[w] = next;
        sigma[w] = sigma[v];
        queue_[tail++] = w;
      } else if (dist[w] == next) {
        sigma[w] += sigma[v];
      }
    }
  }
}

void SsspEngine::run_dijkstra(VertexId source) {
  auto& dist = result_.dist;
  auto& sigma = result_.sigma;
  auto& reachable = result_.reachable;
  constexpr double tol = kTieTolerance;

  std::fill(settled_.begin(), settled_.end(), 0);
  heap_.clear();
  const auto by_dist_desc = [](const std::pair<double, VertexId>& a,
                               const std::pair<double, VertexId>& b) {
    return a.first > b.first;  // min-heap
  };

  dist[source] = 0.0;
  sigma[source] = 1.0;
  reachable[source] = 1;
  heap_.emplace_back(0.0, source);

  while (!heap_.empty()) {
    std::pop_heap(heap_.begin(), heap_.end(), by_dist_desc);
    const auto [d, v] = heap_.back();
    heap_.pop_back();
    if (settled_[v]) continue;  // stale entry
    settled_[v] = 1;

    const auto nbrs = g_->neighbors(v);
    const auto ws = g_->edge_weights(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const VertexId w = nbrs[i];
      const double cand = dist[v] + ws[i];
      if (cand < dist[w] - tol) {
        dist[w] = cand;
        sigma[w] = sigma[v];
        reachable[w] = 1;
        heap_.emplace_back(cand, w);
        std::push_heap(heap_.begin(), heap_.end(), by_dist_desc);
      } else if (cand <= dist[w] + tol) {
        // Tied within tolerance: same shortest distance, more paths. The
        // first-found distance stays as the representative value.
        sigma[w] += sigma[v];
      }
    }
  }
}

SsspResult shortest_path_dag(const Graph& g, VertexId source) {
  if (source >= g.vertex_count()) throw std::invalid_argument("source vertex out of range");
  SsspEngine engine(g);
  return engine.run(source);
}

}  // namespace disnet
