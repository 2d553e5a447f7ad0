#include "disnet/graph.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace disnet {

namespace {

std::string format_location(const std::string& source, std::size_t line,
                            const std::string& what) {
  if (line == 0) return source + ": " + what;
  return source + ":" + std::to_string(line) + ": " + what;
}

// Trims trailing CR (so CRLF files parse) and reports whether the line holds
// anything besides whitespace or a '#'/'%' comment.
bool is_payload_line(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::size_t first = line.find_first_not_of(" \t");
  if (first == std::string::npos) return false;
  return line[first] != '#' && line[first] != '%';
}

bool parse_full_double(const std::string& token, double& out) {
  errno = 0;
  char* end = nullptr;
  out = std::strtod(token.c_str(), &end);
  return end == token.c_str() + token.size() && !token.empty() && errno == 0;
}

bool parse_full_int64(const std::string& token, std::int64_t& out) {
  const char* first = token.c_str();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

class LabelInterner {
 public:
  VertexId id_of(const std::string& label) {
    auto [it, inserted] = ids_.try_emplace(label, static_cast<VertexId>(labels_.size()));
    if (inserted) labels_.push_back(label);
    return it->second;
  }

  std::vector<std::string> take_labels() { return std::move(labels_); }

 private:
  std::unordered_map<std::string, VertexId> ids_;
  std::vector<std::string> labels_;
};

}  // namespace

InputError::InputError(const std::string& source, std::size_t line, const std::string& what)
    : std::runtime_error(format_location(source, line, what)) {}

Graph Graph::from_edges(std::vector<std::string> labels, std::vector<Edge> edges,
                        bool weighted) {
  const std::size_t n = labels.size();

  std::size_t kept = 0;
  for (Edge e : edges) {
    if (e.u == e.v) continue;  // self-loop
    if (e.u >= n || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (e.u > e.v) std::swap(e.u, e.v);
    edges[kept++] = e;
  }
  edges.resize(kept);

  // Sorting by (u, v, w) makes the first edge of a parallel bundle the one
  // with the smallest weight, so unique-by-endpoints keeps exactly that edge.
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v, a.w) < std::tie(b.u, b.v, b.w);
  });
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](const Edge& a, const Edge& b) {
                            return a.u == b.u && a.v == b.v;
                          }),
              edges.end());

  Graph g;
  g.weighted_ = weighted;
  g.labels_ = std::move(labels);
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : edges) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];

  g.adjacency_.resize(edges.size() * 2);
  if (weighted) g.weights_.resize(edges.size() * 2);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges arrive sorted by (u, v), so every adjacency list fills in ascending
  // neighbor order: for vertex x, edges (y, x) with y < x come first (sorted
  // by y), then edges (x, z) sorted by z.
  for (const Edge& e : edges) {
    g.adjacency_[cursor[e.u]] = e.v;
    g.adjacency_[cursor[e.v]] = e.u;
    if (weighted) {
      g.weights_[cursor[e.u]] = e.w;
      g.weights_[cursor[e.v]] = e.w;
    }
    ++cursor[e.u];
    ++cursor[e.v];
  }
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph load_edge_list(const std::string& path, bool weighted) {
  std::ifstream in(path);
  if (!in) throw InputError(path, 0, "cannot open file");
  return load_edge_list(in, weighted, path);
}

Graph load_edge_list(std::istream& in, bool weighted, const std::string& source) {
  LabelInterner interner;
  std::vector<Edge> edges;
  std::string line;
  std::size_t lineno = 0;

  while (std::getline(in, line)) {
    ++lineno;
    if (!is_payload_line(line)) continue;

    std::istringstream fields(line);
    std::string tu, tv, tw, extra;
    if (!(fields >> tu >> tv))
      throw InputError(source, lineno, "expected 'u v' or 'u v w'");
    const bool has_third = static_cast<bool>(fields >> tw);
    if (fields >> extra) throw InputError(source, lineno, "too many fields");

    double w = 1.0;
    if (weighted) {
      if (!has_third) throw InputError(source, lineno, "missing edge weight");
      if (!parse_full_double(tw, w)) throw InputError(source, lineno, "bad edge weight '" + tw + "'");
      if (!(w > 0.0) || !std::isfinite(w))
        throw InputError(source, lineno, "edge weight must be positive and finite");
    }

    if (tu == tv) continue;  // self-loop, vertex not registered
    edges.push_back({interner.id_of(tu), interner.id_of(tv), w});
  }

  if (edges.empty()) throw InputError(source, 0, "empty graph (no edges)");
  return Graph::from_edges(interner.take_labels(), std::move(edges), weighted);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  char buf[32];
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const auto nbrs = g.neighbors(u);
    const auto ws = g.edge_weights(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] <= u) continue;  // each undirected edge once
      out << g.label(u) << '\t' << g.label(nbrs[i]);
      if (g.weighted()) {
        std::snprintf(buf, sizeof buf, "%.17g", ws[i]);
        out << '\t' << buf;
      }
      out << '\n';
    }
  }
}

void write_label_map(const Graph& g, std::ostream& out) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    out << v << '\t' << g.label(v) << '\n';
}

ConnectedComponents connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  ConnectedComponents cc;
  cc.component_of.assign(n, UINT32_MAX);
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < n; ++root) {
    if (cc.component_of[root] != UINT32_MAX) continue;
    const auto comp = static_cast<std::uint32_t>(cc.sizes.size());
    std::size_t size = 0;
    cc.component_of[root] = comp;
    stack.push_back(root);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      ++size;
      for (VertexId w : g.neighbors(v)) {
        if (cc.component_of[w] == UINT32_MAX) {
          cc.component_of[w] = comp;
          stack.push_back(w);
        }
      }
    }
    cc.sizes.push_back(size);
  }
  return cc;
}

bool label_less(const std::string& a, const std::string& b) {
  std::int64_t na = 0, nb = 0;
  const bool a_num = parse_full_int64(a, na);
  const bool b_num = parse_full_int64(b, nb);
  if (a_num && b_num) return na != nb ? na < nb : a < b;
  if (a_num != b_num) return a_num;  // numeric labels order first
  return a < b;
}

Graph largest_connected_component(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return g;
  const ConnectedComponents cc = connected_components(g);

  // Smallest original label per component, for breaking size ties.
  std::vector<const std::string*> min_label(cc.count(), nullptr);
  for (VertexId v = 0; v < n; ++v) {
    const std::string*& cur = min_label[cc.component_of[v]];
    if (cur == nullptr || label_less(g.label(v), *cur)) cur = &g.label(v);
  }

  std::uint32_t best = 0;
  for (std::uint32_t c = 1; c < cc.count(); ++c) {
    if (cc.sizes[c] > cc.sizes[best] ||
        (cc.sizes[c] == cc.sizes[best] && label_less(*min_label[c], *min_label[best])))
      best = c;
  }

  std::vector<VertexId> new_id(n, UINT32_MAX);
  std::vector<std::string> labels;
  labels.reserve(cc.sizes[best]);
  for (VertexId v = 0; v < n; ++v) {
    if (cc.component_of[v] != best) continue;
    new_id[v] = static_cast<VertexId>(labels.size());
    labels.push_back(g.label(v));
  }

  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    if (cc.component_of[u] != best) continue;
    const auto nbrs = g.neighbors(u);
    const auto ws = g.edge_weights(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] <= u) continue;
      edges.push_back({new_id[u], new_id[nbrs[i]], g.weighted() ? ws[i] : 1.0});
    }
  }
  return Graph::from_edges(std::move(labels), std::move(edges), g.weighted());
}

TemporalEdgeList load_temporal_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, 0, "cannot open file");
  return load_temporal_edge_list(in, path);
}

TemporalEdgeList load_temporal_edge_list(std::istream& in, const std::string& source) {
  LabelInterner interner;
  TemporalEdgeList list;
  std::string line;
  std::size_t lineno = 0;

  while (std::getline(in, line)) {
    ++lineno;
    if (!is_payload_line(line)) continue;

    std::istringstream fields(line);
    std::string tu, tv, tt, extra;
    if (!(fields >> tu >> tv >> tt))
      throw InputError(source, lineno, "expected 'u v t'");
    if (fields >> extra) throw InputError(source, lineno, "too many fields");

    std::int64_t t = 0;
    if (!parse_full_int64(tt, t))
      throw InputError(source, lineno, "bad timestamp '" + tt + "'");

    if (tu == tv) continue;  // self-interaction, dropped
    list.entries.push_back({interner.id_of(tu), interner.id_of(tv), t});
  }

  list.labels = interner.take_labels();
  return list;
}

}  // namespace disnet
