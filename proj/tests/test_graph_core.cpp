#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "sbg/fixtures.hpp"
#include "sbg/graph.hpp"

using namespace sbg;

TEST_CASE("from_edge_list parses simple graphs") {
  Digraph dicycle = Digraph::from_edge_list("0 1\n1 0\n");
  CHECK(dicycle.n() == 2);
  CHECK(dicycle.m() == 2);

  Digraph tri = Digraph::from_edge_list("1 2\n2 3\n3 1\n");
  CHECK(tri.n() == 3);
  CHECK(tri.m() == 3);
  CHECK(tri == fixture("tri"));
}

TEST_CASE("from_edge_list handles comments, blanks and duplicates") {
  Digraph g = Digraph::from_edge_list("# comment\n\n1 2\n1 2\n  \n2 1\n");
  CHECK(g.n() == 2);
  CHECK(g.m() == 2);
}

TEST_CASE("from_edge_list reports malformed input with line numbers") {
  CHECK_THROWS_WITH(Digraph::from_edge_list("1 2\nfoo bar\n"),
                    Catch::Matchers::ContainsSubstring("line 2"));
  CHECK_THROWS_WITH(Digraph::from_edge_list("1 2\n3\n"),
                    Catch::Matchers::ContainsSubstring("line 2"));
  CHECK_THROWS_WITH(Digraph::from_edge_list("1 2 3\n"),
                    Catch::Matchers::ContainsSubstring("line 1"));
  CHECK_THROWS_WITH(Digraph::from_edge_list("1 2\n-1 2\n"),
                    Catch::Matchers::ContainsSubstring("line 2"));
}

TEST_CASE("from_edge_list rejects self-loops") {
  CHECK_THROWS_AS(Digraph::from_edge_list("1 2\n3 3\n"), ParseError);
}

TEST_CASE("fig1a fixture parses to n=7 m=24") {
  Digraph g = Digraph::from_edge_list(fixture("fig1a").to_edge_list());
  CHECK(g.n() == 7);
  CHECK(g.m() == 24);
}

TEST_CASE("underlying merges antiparallel arcs") {
  CHECK(underlying(fixture("tri")).m() == 3);
  CHECK(underlying(Digraph::from_edge_list("0 1\n1 0\n")).m() == 1);
  // fig1a: 24 arcs, 7 antiparallel pairs collapse
  CHECK(underlying(fixture("fig1a")).m() == 17);
}

TEST_CASE("remove_vertex builds the induced subgraph") {
  Digraph tri = fixture("tri");
  Digraph r = tri.remove_vertex(3);
  CHECK(r.n() == 2);
  CHECK(r.arcs() == std::vector<Arc>{{1, 2}});

  // fig1b minus 1: bidirected path 2-3-4-6-7-5, 10 arcs
  Digraph p = fixture("fig1b").remove_vertex(1);
  CHECK(p.n() == 6);
  CHECK(p.m() == 10);
  std::vector<Arc> expected;
  const std::vector<VertexId> path{2, 3, 4, 6, 7, 5};
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    expected.push_back({path[i], path[i + 1]});
    expected.push_back({path[i + 1], path[i]});
  }
  std::sort(expected.begin(), expected.end());
  CHECK(p.arcs() == expected);

  Digraph lone = Digraph::from_edge_list("0 1\n1 0\n").remove_vertex(0);
  CHECK(lone.n() == 1);
  CHECK(lone.m() == 0);

  CHECK_THROWS_AS(tri.remove_vertex(9), GraphError);
}

TEST_CASE("subgraph_with_arcs keeps the vertex set") {
  Digraph a = fixture("fig1a");
  Digraph b = fixture("fig1b");
  CHECK(a.subgraph_with_arcs(b.arcs()) == b);
  CHECK(a.subgraph_with_arcs(a.arcs()) == a);

  Digraph empty_tri = fixture("tri").subgraph_with_arcs({});
  CHECK(empty_tri.n() == 3);
  CHECK(empty_tri.m() == 0);

  CHECK_THROWS_AS(b.subgraph_with_arcs({{2, 5}}), GraphError);
}

TEST_CASE("underlying size bounds hold on random graphs") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Digraph g = oracle::random_digraph(6, seed);
    UGraph u = underlying(g);
    CHECK(u.m() <= g.m());
    CHECK(2 * u.m() >= g.m());
  }
}

TEST_CASE("remove_vertex commutes with underlying") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Digraph g = oracle::random_digraph(6, seed);
    for (VertexId v : g.vertices())
      CHECK(underlying(g.remove_vertex(v)) == underlying(g).remove_vertex(v));
  }
}

TEST_CASE("edge-list round-trip is the identity on canonical form") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Digraph g = oracle::random_digraph(7, seed);
    std::string text = g.to_edge_list();
    Digraph back = Digraph::from_edge_list(text);
    CHECK(back.arcs() == g.arcs());  // isolated vertices are not serialized
    CHECK(back.to_edge_list() == text);
  }
}
