#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace disnet {

using VertexId = std::uint32_t;

/// Raised for malformed or unusable input (bad lines, bad weights, empty
/// graphs). The message carries "<source>:<line>:" when a line is known.
struct InputError : std::runtime_error {
  InputError(const std::string& source, std::size_t line, const std::string& what);
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double w = 1.0;
};

/// Undirected simple graph in CSR form. Vertices carry dense ids [0, n) plus
/// the original input label of each vertex. Instances are immutable after
/// construction and safe to share across threads.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph over labels.size() vertices. Self-loops are dropped and
  /// parallel edges collapsed; for weighted input the smallest weight of a
  /// parallel bundle is kept. Adjacency lists come out sorted by neighbor id.
  static Graph from_edges(std::vector<std::string> labels, std::vector<Edge> edges,
                          bool weighted);

  std::size_t vertex_count() const { return labels_.size(); }
  /// Number of undirected edges (each counted once).
  std::size_t edge_count() const { return adjacency_.size() / 2; }
  bool weighted() const { return weighted_; }

  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  /// Weights aligned with neighbors(v). Empty span for unweighted graphs.
  std::span<const double> edge_weights(VertexId v) const {
    if (!weighted_) return {};
    return {weights_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  bool has_edge(VertexId u, VertexId v) const;

  const std::string& label(VertexId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::size_t>& offsets() const { return offsets_; }
  const std::vector<VertexId>& adjacency() const { return adjacency_; }
  const std::vector<double>& weights() const { return weights_; }

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  std::vector<std::size_t> offsets_;   // size n+1
  std::vector<VertexId> adjacency_;    // size 2m, sorted within each vertex
  std::vector<double> weights_;        // size 2m when weighted, else empty
  std::vector<std::string> labels_;    // dense id -> original label
  bool weighted_ = false;
};

/// Reads a whitespace-separated edge list ("u v" or "u v w"). Lines starting
/// with '#' or '%' and blank lines are skipped. Labels are arbitrary strings
/// and are mapped to dense ids in order of first appearance; self-loops are
/// dropped and parallel edges collapsed. Weights must be positive and finite.
Graph load_edge_list(const std::string& path, bool weighted = false);
Graph load_edge_list(std::istream& in, bool weighted, const std::string& source);

/// Writes "label_u<TAB>label_v[<TAB>w]" lines, one per undirected edge, in
/// dense-id order. Reloading the output reproduces the same labeled graph.
void write_edge_list(const Graph& g, std::ostream& out);

/// Writes the dense-id to original-label mapping as "id<TAB>label" lines.
void write_label_map(const Graph& g, std::ostream& out);

struct ConnectedComponents {
  std::vector<std::uint32_t> component_of;  // vertex -> component index
  std::vector<std::size_t> sizes;           // component index -> vertex count
  std::size_t count() const { return sizes.size(); }
};

ConnectedComponents connected_components(const Graph& g);

/// Induced subgraph on the largest connected component, densely relabeled
/// (new ids follow ascending old ids, original labels retained). Ties between
/// equal-size components go to the one whose smallest original label is
/// least; integer labels compare numerically, others lexicographically.
Graph largest_connected_component(const Graph& g);

/// Orders vertex labels numerically when both parse as integers and
/// lexicographically otherwise (numeric labels sort before non-numeric).
bool label_less(const std::string& a, const std::string& b);

struct TemporalEdge {
  VertexId u = 0;  // indices into TemporalEdgeList::labels
  VertexId v = 0;
  std::int64_t time = 0;
};

/// Interaction list in input order: duplicates are kept, self-loops dropped.
struct TemporalEdgeList {
  std::vector<std::string> labels;
  std::vector<TemporalEdge> entries;
};

/// Reads "u v t" lines (t integer). Comment and blank lines are skipped as in
/// load_edge_list; entry order is preserved.
TemporalEdgeList load_temporal_edge_list(const std::string& path);
TemporalEdgeList load_temporal_edge_list(std::istream& in, const std::string& source);

}  // namespace disnet
