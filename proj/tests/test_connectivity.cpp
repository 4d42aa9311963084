#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "sbg/connectivity.hpp"
#include "sbg/fixtures.hpp"
#include "sbg/graph.hpp"

using namespace sbg;

TEST_CASE("scc on small graphs") {
  Partition tri = scc(fixture("tri"));
  REQUIRE(tri.classes.size() == 1);
  CHECK(tri.classes[0] == std::vector<VertexId>{1, 2, 3});

  Partition arc = scc(Digraph::from_edge_list("1 2\n"));
  REQUIRE(arc.classes.size() == 2);
  CHECK(arc.classes[0] == std::vector<VertexId>{1});
  CHECK(arc.classes[1] == std::vector<VertexId>{2});

  Partition a = scc(fixture("fig1a"));
  REQUIRE(a.classes.size() == 1);
  CHECK(a.classes[0].size() == 7);
}

TEST_CASE("is_strongly_connected conventions") {
  CHECK(is_strongly_connected(fixture("fig1b")));
  CHECK_FALSE(is_strongly_connected(Digraph::from_edge_list("1 2\n")));
  CHECK_FALSE(is_strongly_connected(Digraph{}));
  CHECK(is_strongly_connected(Digraph({5}, {})));  // single vertex
}

TEST_CASE("scc classes match brute-force mutual reachability") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Digraph g = oracle::random_digraph(4 + seed % 5, seed);
    Partition p = scc(g);
    CHECK(p.classes == oracle::scc_brute(g));
  }
}

TEST_CASE("blocks on paths, triangles and shared cut vertices") {
  UGraph path({}, {{1, 2}, {2, 3}});
  BlockDecomposition bd = blocks(path);
  REQUIRE(bd.blocks.size() == 2);
  CHECK(bd.blocks[0] == std::vector<VertexId>{1, 2});
  CHECK(bd.blocks[1] == std::vector<VertexId>{2, 3});
  CHECK(bd.articulation_points == std::vector<VertexId>{2});

  UGraph tri({}, {{1, 2}, {2, 3}, {1, 3}});
  bd = blocks(tri);
  REQUIRE(bd.blocks.size() == 1);
  CHECK(bd.articulation_points.empty());

  UGraph two_tri({}, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}});
  bd = blocks(two_tri);
  REQUIRE(bd.blocks.size() == 2);
  CHECK(bd.blocks[0] == std::vector<VertexId>{1, 2, 3});
  CHECK(bd.blocks[1] == std::vector<VertexId>{3, 4, 5});
  CHECK(bd.articulation_points == std::vector<VertexId>{3});
}

TEST_CASE("blocks handle isolated vertices and lone edges") {
  UGraph g({1, 2, 3, 9}, {{1, 2}});
  BlockDecomposition bd = blocks(g);
  REQUIRE(bd.blocks.size() == 3);
  CHECK(bd.blocks[0] == std::vector<VertexId>{1, 2});
  CHECK(bd.blocks[1] == std::vector<VertexId>{3});
  CHECK(bd.blocks[2] == std::vector<VertexId>{9});
}

TEST_CASE("block edge partition and articulation points match brute force") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Digraph g = oracle::random_digraph(4 + seed % 5, seed, 1, 2);
    UGraph ug = underlying(g);
    BlockDecomposition bd = blocks(ug);
    // every edge in exactly one block
    CHECK(bd.edge_block.size() == static_cast<std::size_t>(ug.m()));
    for (const auto& [e, b] : bd.edge_block) {
      REQUIRE(b < static_cast<int>(bd.blocks.size()));
      const auto& blk = bd.blocks[b];
      CHECK(std::binary_search(blk.begin(), blk.end(), e.first));
      CHECK(std::binary_search(blk.begin(), blk.end(), e.second));
    }
    CHECK(bd.articulation_points == oracle::articulation_points_brute(ug));
  }
}

TEST_CASE("is_biconnected conventions and examples") {
  CHECK(is_biconnected(UGraph({}, {{1, 2}, {2, 3}, {1, 3}})));
  CHECK_FALSE(is_biconnected(UGraph({}, {{1, 2}, {2, 3}})));
  CHECK(is_biconnected(underlying(fixture("fig1b"))));  // 7-cycle
  CHECK(is_biconnected(UGraph({4}, {})));               // single vertex
  CHECK(is_biconnected(UGraph({}, {{1, 2}})));          // K2
  CHECK_FALSE(is_biconnected(UGraph{}));
}

TEST_CASE("is_2vc_digraph examples") {
  CHECK(is_2vc_digraph(fixture("fig1b")));
  CHECK_FALSE(is_2vc_digraph(fixture("tri")));
  CHECK(is_2vc_digraph(fixture("fig1a")));
}

TEST_CASE("is_2vc_digraph agrees with the definitional oracle") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Digraph g = oracle::random_digraph(4 + seed % 4, seed, 2, 3);
    CHECK(is_2vc_digraph(g) == oracle::is_2vc_brute(g));
  }
}

TEST_CASE("is_3vc_ugraph examples") {
  UGraph k4({}, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(is_3vc_ugraph(k4));
  UGraph c5({}, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
  CHECK_FALSE(is_3vc_ugraph(c5));
  UGraph k4_minus({}, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  CHECK_FALSE(is_3vc_ugraph(k4_minus));
}

TEST_CASE("degree consequences of k-connectivity") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Digraph g = random_2vsb(4 + seed % 5, seed % 3, seed);
    if (is_2vc_digraph(g)) {
      for (int v = 0; v < g.n(); ++v) {
        CHECK(g.out_adj()[v].size() >= 2);
        CHECK(g.in_adj()[v].size() >= 2);
      }
    }
    UGraph ug = underlying(g);
    if (is_3vc_ugraph(ug))
      for (int v = 0; v < ug.n(); ++v) CHECK(ug.adj()[v].size() >= 3);
  }
}
