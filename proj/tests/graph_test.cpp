#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "disnet/graph.hpp"
#include "oracle.hpp"

using disnet::Graph;
using disnet::InputError;
using disnet::VertexId;

namespace {

Graph parse(const std::string& text, bool weighted = false) {
  std::istringstream in(text);
  return disnet::load_edge_list(in, weighted, "<test>");
}

disnet::TemporalEdgeList parse_temporal(const std::string& text) {
  std::istringstream in(text);
  return disnet::load_temporal_edge_list(in, "<test>");
}

// Label-level view of the edge set, independent of dense id assignment.
std::vector<std::tuple<std::string, std::string, double>> labeled_edges(const Graph& g) {
  std::vector<std::tuple<std::string, std::string, double>> out;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    const auto nbrs = g.neighbors(u);
    const auto ws = g.edge_weights(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] <= u) continue;
      auto a = g.label(u), b = g.label(nbrs[i]);
      if (b < a) std::swap(a, b);
      out.emplace_back(a, b, g.weighted() ? ws[i] : 1.0);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("load drops self-loops and duplicate edges") {
  const Graph g = parse("0 1\n1 2\n2 0\n0 0\n0 1\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
}

TEST_CASE("string labels are mapped densely in first-appearance order") {
  const Graph g = parse("a b\nb c\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.label(0) == "a");
  CHECK(g.label(1) == "b");
  CHECK(g.label(2) == "c");
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("comment and blank lines are skipped") {
  const Graph g = parse("# header\n% more\n\n  \n0 1\n# trailing\n1 2\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("parse failures report the line number") {
  CHECK_THROWS_WITH_AS(parse("0 1\n0\n"), doctest::Contains(":2:"), InputError);
  CHECK_THROWS_WITH_AS(parse("0 1 2 3\n"), doctest::Contains(":1:"), InputError);
  CHECK_THROWS_WITH_AS(parse("0 1 1.5\n1 2 x\n2 3 1.0\n", true),
                       doctest::Contains(":2:"), InputError);
}

TEST_CASE("weighted edges must carry positive finite weights") {
  CHECK_THROWS_AS(parse("0 1 -2.0\n", true), InputError);
  CHECK_THROWS_AS(parse("0 1 0\n", true), InputError);
  CHECK_THROWS_AS(parse("0 1 inf\n", true), InputError);
  CHECK_THROWS_AS(parse("0 1\n", true), InputError);
  const Graph g = parse("0 1 2.5\n", true);
  CHECK(g.weighted());
  CHECK(g.edge_weights(0)[0] == 2.5);
}

TEST_CASE("unweighted load ignores a third column") {
  const Graph g = parse("0 1 5\n1 2 7\n");
  CHECK(g.vertex_count() == 3);
  CHECK_FALSE(g.weighted());
}

TEST_CASE("empty input is rejected") {
  CHECK_THROWS_WITH_AS(parse("# nothing\n"), doctest::Contains("empty graph"), InputError);
  CHECK_THROWS_WITH_AS(parse("3 3\n"), doctest::Contains("empty graph"), InputError);
}

TEST_CASE("parallel weighted edges keep the minimum weight") {
  const Graph g = parse("0 1 3.0\n0 1 1.5\n1 0 2.0\n", true);
  CHECK(g.edge_count() == 1);
  CHECK(g.edge_weights(0)[0] == 1.5);
}

TEST_CASE("offsets are cumulative degrees and adjacency is sorted") {
  const Graph g = oracle::random_connected(40, 0.15, 7);
  const auto& off = g.offsets();
  REQUIRE(off.size() == g.vertex_count() + 1);
  CHECK(off.front() == 0);
  CHECK(off.back() == 2 * g.edge_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    CHECK(g.degree(v) == off[v + 1] - off[v]);
    const auto nbrs = g.neighbors(v);
    CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
    CHECK(std::adjacent_find(nbrs.begin(), nbrs.end()) == nbrs.end());  // no duplicates
    for (VertexId w : nbrs) CHECK(w != v);
  }
}

TEST_CASE("round trip through edge-list text preserves the labeled graph") {
  const Graph g = parse("b c\na b\nc d 1\nb d\n");
  std::ostringstream out;
  disnet::write_edge_list(g, out);
  const Graph back = parse(out.str());
  CHECK(labeled_edges(back) == labeled_edges(g));
  CHECK(back.vertex_count() == g.vertex_count());

  const Graph wg = oracle::make_weighted_graph(
      5, {{0, 1, 0.25}, {1, 2, 3.125}, {2, 3, 1e-3}, {3, 4, 7.0}, {4, 0, 2.0}});
  std::ostringstream wout;
  disnet::write_edge_list(wg, wout);
  const Graph wback = parse(wout.str(), true);
  CHECK(labeled_edges(wback) == labeled_edges(wg));
}

TEST_CASE("label map writes dense id and original label") {
  const Graph g = parse("x y\ny z\n");
  std::ostringstream out;
  disnet::write_label_map(g, out);
  CHECK(out.str() == "0\tx\n1\ty\n2\tz\n");
}

TEST_CASE("connected components are counted and sized") {
  const Graph g = parse("0 1\n1 2\n3 4\n5 6\n6 7\n7 5\n");
  const auto cc = disnet::connected_components(g);
  CHECK(cc.count() == 3);
  CHECK(cc.component_of[0] == cc.component_of[2]);
  CHECK(cc.component_of[3] != cc.component_of[0]);
  std::vector<std::size_t> sizes = cc.sizes;
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{2, 3, 3});
}

TEST_CASE("largest component extraction keeps labels and weights") {
  // Triangle {0,1,2}, path {5,6} -> triangle wins.
  const Graph g = parse("0 1\n1 2\n2 0\n5 6\n");
  const Graph lcc = disnet::largest_connected_component(g);
  CHECK(lcc.vertex_count() == 3);
  CHECK(lcc.edge_count() == 3);
  CHECK(lcc.labels() == std::vector<std::string>{"0", "1", "2"});

  SUBCASE("on a connected graph it is the identity") {
    const Graph base = parse("0 1\n1 2\n2 0\n");
    CHECK(disnet::largest_connected_component(base) == base);
  }

  SUBCASE("idempotent") {
    CHECK(disnet::largest_connected_component(lcc) == lcc);
  }
}

TEST_CASE("component ties break on the smallest original label") {
  // Two triangles of equal size; {1,2,3} has the smaller minimum label even
  // though {5,6,7} appears first in the file.
  const Graph g = parse("5 6\n6 7\n7 5\n1 2\n2 3\n3 1\n");
  const Graph lcc = disnet::largest_connected_component(g);
  REQUIRE(lcc.vertex_count() == 3);
  CHECK(lcc.labels() == std::vector<std::string>{"1", "2", "3"});

  SUBCASE("numeric labels compare numerically, not lexicographically") {
    const Graph h = parse("10 11\n11 12\n12 10\n9 2\n2 5\n5 9\n");
    const Graph hl = disnet::largest_connected_component(h);
    std::vector<std::string> labels = hl.labels();
    std::sort(labels.begin(), labels.end());
    CHECK(labels == std::vector<std::string>{"2", "5", "9"});
  }
}

TEST_CASE("largest component of a two-triangle plus edge graph") {
  const Graph g = parse("0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n6 7\n");
  const Graph lcc = disnet::largest_connected_component(g);
  CHECK(lcc.vertex_count() == 3);
  CHECK(lcc.labels() == std::vector<std::string>{"0", "1", "2"});
}

TEST_CASE("temporal lists preserve order, keep duplicates, drop self-loops") {
  const auto list = parse_temporal("3 4 100\n1 2 50\n1 2 50\n3 3 7\n2 3 60\n");
  REQUIRE(list.entries.size() == 4);
  CHECK(list.labels[list.entries[0].u] == "3");
  CHECK(list.entries[0].time == 100);
  CHECK(list.entries[1].time == 50);
  CHECK(list.entries[2].time == 50);
  CHECK(list.entries[3].time == 60);
  // duplicate rows stay distinct entries
  CHECK(list.entries[1].u == list.entries[2].u);
  CHECK(list.entries[1].v == list.entries[2].v);
}

TEST_CASE("temporal parse failures report the line number") {
  CHECK_THROWS_WITH_AS(parse_temporal("1 2 5\n1 2\n"), doctest::Contains(":2:"), InputError);
  CHECK_THROWS_WITH_AS(parse_temporal("1 2 x\n"), doctest::Contains(":1:"), InputError);
  CHECK_THROWS_WITH_AS(parse_temporal("1 2 5 9\n"), doctest::Contains(":1:"), InputError);
}

TEST_CASE("temporal list may be empty") {
  const auto list = parse_temporal("# nothing here\n");
  CHECK(list.entries.empty());
}
