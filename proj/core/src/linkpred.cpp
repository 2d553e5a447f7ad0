#include "disnet/linkpred.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>

#include "disnet/parallel.hpp"
#include "disnet/rng.hpp"
#include "disnet/sssp.hpp"

namespace disnet {

namespace {

constexpr std::uint64_t kAucDrawStream = 2;
constexpr std::uint64_t kEvalRatioStream = 3;

std::uint64_t pack_pair(VertexId u, VertexId v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

bool is_test_pair(const std::vector<std::pair<VertexId, VertexId>>& test_pairs, VertexId u,
                  VertexId v) {
  return std::binary_search(test_pairs.begin(), test_pairs.end(), std::make_pair(u, v));
}

}  // namespace

const char* method_name(PredMethod m) {
  switch (m) {
    case PredMethod::lidin: return "lidin";
    case PredMethod::negspl: return "negspl";
    case PredMethod::adamic_adar: return "aa";
  }
  return "?";
}

TrainTestSplit temporal_split(const TemporalEdgeList& edges, const SplitSpec& spec) {
  if (!(spec.ratio > 0.0 && spec.ratio < 1.0))
    throw std::invalid_argument("training ratio must be in (0, 1)");
  if (edges.entries.empty()) throw std::invalid_argument("empty temporal edge list");

  // Entry order: timestamp, then position in the input file.
  std::vector<std::size_t> order(edges.entries.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return edges.entries[a].time < edges.entries[b].time;
  });

  std::size_t count = order.size();
  if (spec.edge_cap && *spec.edge_cap < count) count = *spec.edge_cap;
  if (count == 0) throw std::invalid_argument("edge cap must be at least 1");

  auto train_count =
      static_cast<std::size_t>(std::ceil(spec.ratio * static_cast<double>(count)));
  if (train_count < 1) train_count = 1;
  if (train_count > count) train_count = count;

  // Training graph over the endpoints of training entries only, labels
  // carried over, dense ids in order of first appearance.
  constexpr VertexId kUnmapped = UINT32_MAX;
  std::vector<VertexId> to_train(edges.labels.size(), kUnmapped);
  std::vector<std::string> train_labels;
  std::vector<Edge> train_edges;
  auto map_vertex = [&](VertexId id) {
    if (to_train[id] == kUnmapped) {
      to_train[id] = static_cast<VertexId>(train_labels.size());
      train_labels.push_back(edges.labels[id]);
    }
    return to_train[id];
  };
  for (std::size_t i = 0; i < train_count; ++i) {
    const TemporalEdge& e = edges.entries[order[i]];
    train_edges.push_back({map_vertex(e.u), map_vertex(e.v), 1.0});
  }
  if (train_edges.empty()) throw std::invalid_argument("empty training graph");

  TrainTestSplit split;
  split.train_graph =
      Graph::from_edges(std::move(train_labels), std::move(train_edges), false);
  split.test_event_count = count - train_count;

  for (std::size_t i = train_count; i < count; ++i) {
    const TemporalEdge& e = edges.entries[order[i]];
    const VertexId tu = to_train[e.u], tv = to_train[e.v];
    if (tu == kUnmapped || tv == kUnmapped) continue;  // endpoint unseen in training
    const auto [a, b] = std::minmax(tu, tv);
    if (split.train_graph.has_edge(a, b)) continue;  // already connected
    split.test_pairs.emplace_back(a, b);
  }
  std::sort(split.test_pairs.begin(), split.test_pairs.end());
  split.test_pairs.erase(std::unique(split.test_pairs.begin(), split.test_pairs.end()),
                         split.test_pairs.end());
  return split;
}

ScoredPairList score_pairs(const TrainTestSplit& split, PredMethod method,
                           const ScoreOptions& opts) {
  const Graph& g = split.train_graph;
  const std::size_t n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("scoring requires at least 2 training vertices");

  const std::size_t candidate_count = n * (n - 1) / 2 - g.edge_count();
  if (candidate_count > opts.max_candidates)
    throw std::runtime_error("candidate set has " + std::to_string(candidate_count) +
                             " pairs, above the configured cap of " +
                             std::to_string(opts.max_candidates) +
                             "; raise max_candidates to proceed");

  ScoredPairList list;
  list.method = method;
  list.entries.reserve(candidate_count);

  // All non-adjacent pairs u < v, grouped by u; group ranges drive the
  // parallel fill below.
  std::vector<std::size_t> group_start(n + 1, 0);
  {
    std::vector<std::uint8_t> adjacent(n, 0);
    for (VertexId u = 0; u < n; ++u) {
      group_start[u] = list.entries.size();
      for (VertexId w : g.neighbors(u)) adjacent[w] = 1;
      for (VertexId v = u + 1; v < n; ++v)
        if (!adjacent[v]) list.entries.push_back({u, v, 0.0, 0.0});
      for (VertexId w : g.neighbors(u)) adjacent[w] = 0;
    }
    group_start[n] = list.entries.size();
  }

  if (method == PredMethod::adamic_adar) {
    parallel_for_indexed(
        n, opts.threads, [] { return 0; },
        [&](int&, std::size_t ui) {
          const auto u = static_cast<VertexId>(ui);
          const auto un = g.neighbors(u);
          for (std::size_t i = group_start[ui]; i < group_start[ui + 1]; ++i) {
            ScoredPair& e = list.entries[i];
            const auto vn = g.neighbors(e.v);
            double score = 0.0;
            for (std::size_t a = 0, b = 0; a < un.size() && b < vn.size();) {
              if (un[a] < vn[b]) {
                ++a;
              } else if (un[a] > vn[b]) {
                ++b;
              } else {
                // A common neighbor of two distinct vertices has degree >= 2,
                // so the log never vanishes.
                score += 1.0 / std::log(static_cast<double>(g.degree(un[a])));
                ++a;
                ++b;
              }
            }
            e.k1 = score != 0.0 ? -score : 0.0;  // descending score = ascending key
          }
        });
  } else {
    parallel_for_indexed(
        n, opts.threads, [&g] { return SsspEngine(g); },
        [&](SsspEngine& engine, std::size_t ui) {
          if (group_start[ui] == group_start[ui + 1]) return;
          const SsspResult& r = engine.run(static_cast<VertexId>(ui));
          for (std::size_t i = group_start[ui]; i < group_start[ui + 1]; ++i) {
            ScoredPair& e = list.entries[i];
            const bool reach = r.reachable[e.v] != 0;
            e.k1 = reach ? r.dist[e.v] : static_cast<double>(n);
            if (method == PredMethod::lidin)
              e.k2 = discriminative_distance(reach ? r.dist[e.v] : 0.0,
                                             reach ? r.sigma[e.v] : 0.0, n,
                                             UnreachablePolicy::substitute_n);
          }
        });
  }

  std::sort(list.entries.begin(), list.entries.end(),
            [](const ScoredPair& a, const ScoredPair& b) {
              return std::tie(a.k1, a.k2, a.u, a.v) < std::tie(b.k1, b.k2, b.u, b.v);
            });
  return list;
}

double auc(const TrainTestSplit& split, const ScoredPairList& list, std::size_t n_t,
           std::uint64_t seed) {
  const Graph& g = split.train_graph;
  const std::size_t n = g.vertex_count();
  if (split.test_pairs.empty()) throw std::invalid_argument("auc needs a nonempty test set");
  if (n_t == 0) throw std::invalid_argument("auc needs at least one draw");
  if (list.entries.size() <= split.test_pairs.size())
    throw std::invalid_argument("auc needs at least one negative candidate pair");

  // Key lookup for drawn pairs.
  std::unordered_map<std::uint64_t, std::pair<double, double>> keys;
  keys.reserve(list.entries.size() * 2);
  for (const ScoredPair& e : list.entries) keys.emplace(pack_pair(e.u, e.v), std::make_pair(e.k1, e.k2));

  std::size_t better2 = 0;  // twice n_g + n_e, to stay integral
  for (std::size_t i = 0; i < n_t; ++i) {
    SplitMix64 rng(substream_seed(seed, kAucDrawStream, i));
    const auto& pos = split.test_pairs[rng.below(split.test_pairs.size())];

    VertexId a, b;
    for (std::size_t attempt = 0;; ++attempt) {
      if (attempt > 100'000'000)
        throw std::runtime_error("auc negative sampling failed to find a candidate");
      const auto x = static_cast<VertexId>(rng.below(n));
      const auto y = static_cast<VertexId>(rng.below(n));
      if (x == y) continue;
      std::tie(a, b) = std::minmax(x, y);
      if (g.has_edge(a, b)) continue;
      if (is_test_pair(split.test_pairs, a, b)) continue;
      break;
    }

    const auto kp = keys.at(pack_pair(pos.first, pos.second));
    const auto kn = keys.at(pack_pair(a, b));
    if (kp < kn)
      better2 += 2;
    else if (kp == kn)
      better2 += 1;
  }
  return static_cast<double>(better2) / (2.0 * static_cast<double>(n_t));
}

double ranking_error(const TrainTestSplit& split, const ScoredPairList& list) {
  if (split.test_pairs.empty())
    throw std::invalid_argument("ranking_error needs a nonempty test set");
  double rank_sum = 0.0;
  std::size_t found = 0;
  for (std::size_t i = 0; i < list.entries.size(); ++i) {
    const ScoredPair& e = list.entries[i];
    if (is_test_pair(split.test_pairs, e.u, e.v)) {
      rank_sum += static_cast<double>(i + 1);
      ++found;
    }
  }
  if (found != split.test_pairs.size())
    throw std::invalid_argument("candidate list does not cover the test pairs");
  return rank_sum / static_cast<double>(split.test_pairs.size());
}

std::size_t default_draw_count(const TrainTestSplit& split) {
  const std::size_t n_t = (split.test_event_count + 9) / 10;
  return n_t > 0 ? n_t : 1;
}

std::vector<EvalRow> evaluate(const TemporalEdgeList& edges, const std::vector<double>& ratios,
                              const std::vector<PredMethod>& methods, std::uint64_t seed,
                              const EvalOptions& opts) {
  std::vector<EvalRow> rows;
  for (std::size_t ri = 0; ri < ratios.size(); ++ri) {
    SplitSpec spec;
    spec.ratio = ratios[ri];
    spec.edge_cap = opts.edge_cap;
    const TrainTestSplit split = temporal_split(edges, spec);
    // All methods at one ratio share this seed, hence the same AUC draws.
    const std::uint64_t ratio_seed = substream_seed(seed, kEvalRatioStream, ri);

    for (PredMethod method : methods) {
      EvalRow row;
      row.ratio = ratios[ri];
      row.method = method;
      row.test_pairs = split.test_pairs.size();
      if (!split.test_pairs.empty()) {
        const ScoredPairList list = score_pairs(split, method, opts.score);
        row.n_t = opts.n_t ? *opts.n_t : default_draw_count(split);
        row.auc = auc(split, list, row.n_t, ratio_seed);
        row.q = ranking_error(split, list);
      }
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace disnet
