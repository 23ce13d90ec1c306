#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "domsd/generators.hpp"
#include "domsd/graph.hpp"
#include "domsd/graph_io.hpp"

using namespace domsd;

namespace {

bool adjacency_symmetric(const Graph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (VertexId u : g.neighbors(v)) {
      const auto& back = g.neighbors(u);
      if (!std::binary_search(back.begin(), back.end(), v)) return false;
    }
  return true;
}

bool is_path_graph(const Graph& g) {
  if (!is_tree(g)) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

bool is_cycle_graph(const Graph& g) {
  if (!is_connected(g) || g.edge_count() != g.vertex_count()) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

}  // namespace

TEST_CASE("edges are normalized unordered pairs", "[graph]") {
  Edge e(3, 1);
  CHECK(e.a == 1);
  CHECK(e.b == 3);
  CHECK(e == Edge(1, 3));
  CHECK_THROWS_AS(Edge(2, 2), PreconditionError);
}

TEST_CASE("graph construction rejects bad input", "[graph]") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(0, 1), PreconditionError);
  CHECK_THROWS_AS(g.add_edge(1, 0), PreconditionError);
  CHECK_THROWS_AS(g.add_edge(0, 3), PreconditionError);
  CHECK_THROWS_AS(g.add_edge(2, 2), PreconditionError);
  CHECK_THROWS_AS(g.neighbors(-1), PreconditionError);
  CHECK_THROWS_AS(g.neighbors(3), PreconditionError);
}

TEST_CASE("subdividing an edge splices in a path", "[graph]") {
  SECTION("middle of a 3-path gives a 5-path") {
    const Graph g = subdivide(path(3), Edge(0, 1), 2);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 4);
    CHECK(is_path_graph(g));
    CHECK(diameter(g) == 4);
  }
  SECTION("the only edge of K2 with three vertices gives a 5-path") {
    const Graph g = subdivide(path(2), Edge(0, 1), 3);
    CHECK(g.vertex_count() == 5);
    CHECK(is_path_graph(g));
  }
  SECTION("a cycle grows by one") {
    const Graph g = subdivide(cycle(4), Edge(0, 1), 1);
    CHECK(g.vertex_count() == 5);
    CHECK(is_cycle_graph(g));
  }
  SECTION("input graph is untouched") {
    const Graph g = cycle(4);
    const std::uint64_t before = fingerprint(g);
    (void)subdivide(g, Edge(0, 1), 3);
    CHECK(fingerprint(g) == before);
  }
  SECTION("new ids start at n in path order") {
    const Graph g = subdivide(path(2), Edge(0, 1), 2);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 3));
    CHECK(g.has_edge(3, 1));
  }
  SECTION("errors") {
    CHECK_THROWS_AS(subdivide(path(3), Edge(0, 2), 1), PreconditionError);
    CHECK_THROWS_AS(subdivide(path(3), Edge(0, 1), 0), PreconditionError);
  }
}

TEST_CASE("subdivision counts hold across a small corpus", "[graph]") {
  std::vector<Graph> corpus = {path(5), cycle(6), complete(5), complete_bipartite(2, 3),
                               star(4), wheel(4)};
  for_each_tree(5, [&](const Graph& t) { corpus.push_back(t); });
  enumerate_connected_graphs(4, [&](const Graph& g) { corpus.push_back(g); });
  for (const Graph& g : corpus) {
    REQUIRE(adjacency_symmetric(g));
    for (const Edge& e : g.edges()) {
      for (int t = 1; t <= 3; ++t) {
        const Graph h = subdivide(g, e, t);
        REQUIRE(h.vertex_count() == g.vertex_count() + t);
        REQUIRE(h.edge_count() == g.edge_count() + t);
        REQUIRE(adjacency_symmetric(h));
      }
    }
  }
}

TEST_CASE("simultaneous subdivision of an edge subset", "[graph]") {
  const Graph g = cycle(5);
  const Graph h = subdivide_each_once(g, {Edge(0, 1), Edge(2, 3)});
  CHECK(h.vertex_count() == 7);
  CHECK(h.edge_count() == 7);
  CHECK(is_cycle_graph(h));
  CHECK_THROWS_AS(subdivide_each_once(g, {Edge(0, 1), Edge(0, 1)}), PreconditionError);
  CHECK_THROWS_AS(subdivide_each_once(g, {Edge(0, 2)}), PreconditionError);
}

TEST_CASE("neighborhoods and degrees", "[graph]") {
  const Graph s4 = star(4);
  CHECK(s4.neighbors(0) == std::vector<VertexId>{1, 2, 3, 4});
  CHECK(path(2).neighbors(0) == std::vector<VertexId>{1});
  CHECK(path(2).neighbors(1) == std::vector<VertexId>{0});

  Graph with_isolated(3);
  with_isolated.add_edge(0, 1);
  CHECK(with_isolated.neighbors(2).empty());

  CHECK(star(5).degree(0) == 5);
  CHECK(path(6).degree(0) == 1);
  for (VertexId v = 0; v < 7; ++v) CHECK(cycle(7).degree(v) == 2);
}

TEST_CASE("vertex classification", "[graph]") {
  SECTION("star center is a strong support") {
    const auto cls = classify_vertices(star(3));
    CHECK(cls[0].strong_support);
    CHECK(cls[0].support);
    CHECK_FALSE(cls[0].leaf);
    for (VertexId v = 1; v <= 3; ++v) CHECK(cls[static_cast<std::size_t>(v)].leaf);
  }
  SECTION("4-path has two leaves and two plain supports") {
    const auto cls = classify_vertices(path(4));
    CHECK(cls[0].leaf);
    CHECK(cls[3].leaf);
    CHECK(cls[1].support);
    CHECK(cls[2].support);
    CHECK_FALSE(cls[1].strong_support);
    CHECK_FALSE(cls[2].strong_support);
  }
  SECTION("cycles have neither leaves nor supports") {
    for (const auto& c : classify_vertices(cycle(5))) {
      CHECK_FALSE(c.leaf);
      CHECK_FALSE(c.support);
    }
  }
  SECTION("strong support implies support implies non-leaf unless n = 2") {
    std::vector<Graph> corpus = {path(2), path(6), star(5), wheel(5)};
    for_each_tree(6, [&](const Graph& t) { corpus.push_back(t); });
    for (const Graph& g : corpus) {
      const auto cls = classify_vertices(g);
      for (std::size_t v = 0; v < cls.size(); ++v) {
        if (cls[v].strong_support) CHECK(cls[v].support);
        if (cls[v].support && g.vertex_count() != 2) CHECK_FALSE(cls[v].leaf);
      }
    }
  }
}

TEST_CASE("distance and diameter", "[graph]") {
  CHECK(diameter(path(5)) == 4);
  CHECK(distance(cycle(6), 0, 3) == 3);
  CHECK(diameter(complete(4)) == 1);
  CHECK(diameter(path(1)) == 0);

  Graph two(2);  // no edges
  CHECK_FALSE(distance(two, 0, 1).has_value());
  CHECK_THROWS_AS(diameter(two), PreconditionError);
}

TEST_CASE("structure predicates", "[graph]") {
  CHECK(is_tree(path(7)));
  CHECK_FALSE(is_tree(cycle(4)));
  CHECK(is_connected(cycle(4)));
  CHECK_FALSE(is_bipartite(cycle(5)));
  CHECK(is_bipartite(cycle(6)));
  CHECK(is_bipartite(complete_bipartite(3, 4)));

  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  CHECK_FALSE(is_connected(g));
  CHECK_FALSE(is_tree(g));
  CHECK(is_bipartite(g));
}

TEST_CASE("private neighborhoods", "[graph]") {
  SECTION("middle of a 4-path") {
    const auto pn = private_neighborhood(path(4), 1, {1, 2});
    CHECK(pn == std::vector<VertexId>{0});
  }
  SECTION("triangle with everything selected") {
    CHECK(private_neighborhood(complete(3), 0, {0, 1, 2}).empty());
  }
  SECTION("star center alone keeps its whole closed neighborhood") {
    const auto pn = private_neighborhood(star(3), 0, {0});
    CHECK(pn == std::vector<VertexId>{0, 1, 2, 3});
  }
  CHECK_THROWS_AS(private_neighborhood(path(4), 0, {1, 2}), PreconditionError);
}

TEST_CASE("edge list round trip", "[graph]") {
  const std::string text =
      "# sample\n"
      "\n"
      "4 3\n"
      "0 1\n"
      "# a comment between edges\n"
      "1 2\n"
      "2 3\n";
  std::istringstream in(text);
  const Graph g = read_edge_list(in);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(is_path_graph(g));

  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream back(out.str());
  CHECK(fingerprint(read_edge_list(back)) == fingerprint(g));
}

TEST_CASE("edge list parse errors", "[graph]") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
  };
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("3\n"), ParseError);
  CHECK_THROWS_AS(parse("3 2\n0 1\n"), ParseError);          // too few edges
  CHECK_THROWS_AS(parse("3 1\n0 1\n1 2\n"), ParseError);     // too many edges
  CHECK_THROWS_AS(parse("3 1\n0 0\n"), ParseError);          // self-loop
  CHECK_THROWS_AS(parse("3 2\n0 1\n0 1\n"), ParseError);     // duplicate
  CHECK_THROWS_AS(parse("3 1\n0 7\n"), ParseError);          // out of range
  CHECK_THROWS_AS(parse("3 1\n0 1 9\n"), ParseError);        // trailing token
}

TEST_CASE("dot export", "[graph]") {
  std::ostringstream out;
  std::map<VertexId, std::string> labels{{0, "0:A"}};
  write_dot(out, path(3), &labels);
  const std::string dot = out.str();
  CHECK(dot.find("graph g {") != std::string::npos);
  CHECK(dot.find("0 [label=\"0:A\"];") != std::string::npos);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  CHECK(dot.find("1 -- 2;") != std::string::npos);
}

TEST_CASE("fingerprints distinguish graphs and track content", "[graph]") {
  CHECK(fingerprint(path(4)) == fingerprint(path(4)));
  CHECK(fingerprint(path(4)) != fingerprint(cycle(4)));
  CHECK(fingerprint(path(4)) != fingerprint(path(5)));
}
