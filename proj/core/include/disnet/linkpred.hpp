#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "disnet/graph.hpp"

namespace disnet {

enum class PredMethod { lidin, negspl, adamic_adar };

/// Short lowercase name used by the CLI: "lidin", "negspl", "aa".
const char* method_name(PredMethod m);

struct SplitSpec {
  double ratio = 0.6;                    // training fraction, in (0,1)
  std::optional<std::size_t> edge_cap;   // keep only this many earliest entries
};

struct TrainTestSplit {
  Graph train_graph;
  /// Pairs gaining an edge in the test interval whose endpoints both exist in
  /// the training graph and are not adjacent there. Train-graph dense ids,
  /// u < v, sorted, deduplicated.
  std::vector<std::pair<VertexId, VertexId>> test_pairs;
  /// Raw number of test-interval entries; drives the default AUC draw count.
  std::size_t test_event_count = 0;
};

/// Splits a temporal edge list: entries are ordered by (timestamp, input
/// position), optionally truncated to the `edge_cap` earliest entries, and
/// the first ceil(ratio * count) of them become the training interval. The
/// rest form the test interval.
TrainTestSplit temporal_split(const TemporalEdgeList& edges, const SplitSpec& spec);

/// One candidate pair with its canonical sort key. Keys are built so that
/// ascending (k1, k2, u, v) always means "most likely link first":
///   lidin:   k1 = d, k2 = d/sigma
///   negspl:  k1 = d, k2 = 0
///   aa:      k1 = -score, k2 = 0
/// Candidate pairs with no connecting path use d = n, sigma = 1.
struct ScoredPair {
  VertexId u = 0;
  VertexId v = 0;
  double k1 = 0;
  double k2 = 0;
};

struct ScoredPairList {
  PredMethod method = PredMethod::lidin;
  std::vector<ScoredPair> entries;  // best candidate first
};

struct ScoreOptions {
  std::size_t threads = 0;
  /// score_pairs refuses candidate sets larger than this.
  std::size_t max_candidates = 10'000'000;
};

/// Ranks every unordered pair of distinct training vertices that is not an
/// edge of the training graph. Ties beyond the key fall back to ascending
/// (min id, max id).
ScoredPairList score_pairs(const TrainTestSplit& split, PredMethod method,
                           const ScoreOptions& opts = {});

/// AUC over n_t seeded draws: each draw picks one uniform test pair and one
/// uniform negative candidate (rejection-sampled) and scores 1 when the test
/// pair ranks strictly better, 0.5 on a key tie. Draw i uses a deterministic
/// sub-seed of (seed, i). Requires a nonempty test set and at least one
/// negative candidate.
double auc(const TrainTestSplit& split, const ScoredPairList& list, std::size_t n_t,
           std::uint64_t seed);

/// Mean 1-based rank of the test pairs in the full candidate ranking (lower
/// is better). Requires a nonempty test set.
double ranking_error(const TrainTestSplit& split, const ScoredPairList& list);

/// ceil(test_event_count / 10), at least 1.
std::size_t default_draw_count(const TrainTestSplit& split);

struct EvalRow {
  double ratio = 0;
  PredMethod method = PredMethod::lidin;
  std::optional<double> auc;  // absent when the split has no test pairs
  std::optional<double> q;
  std::size_t test_pairs = 0;
  std::size_t n_t = 0;
};

struct EvalOptions {
  std::optional<std::size_t> edge_cap;
  std::optional<std::size_t> n_t;  // override the default draw count
  ScoreOptions score;
};

/// Full protocol: one row per (ratio, method) in the given order. All methods
/// at the same ratio share the same AUC draws, so their values are directly
/// comparable; everything is deterministic in (edges, ratios, methods, seed).
std::vector<EvalRow> evaluate(const TemporalEdgeList& edges,
                              const std::vector<double>& ratios,
                              const std::vector<PredMethod>& methods, std::uint64_t seed,
                              const EvalOptions& opts = {});

}  // namespace disnet
