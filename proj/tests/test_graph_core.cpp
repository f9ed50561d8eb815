#include <sstream>

#include "doctest.h"
#include "kpath/error.hpp"
#include "kpath/graph.hpp"
#include "kpath/io.hpp"
#include "support/generators.hpp"

using namespace kpath;

namespace {

// Cutvertices by deleting each vertex and counting components.
std::vector<Vertex> brute_cutvertices(const Graph& g) {
  std::vector<Vertex> out;
  const auto base = connected_components(g).size();
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<Vertex> rest;
    for (Vertex u = 0; u < g.order(); ++u) {
      if (u != v) rest.push_back(u);
    }
    auto sub = induced_subgraph(g, rest).graph;
    // Deleting an isolated vertex drops a component; anything else that
    // raises the count is a cutvertex.
    if (connected_components(sub).size() > base - (g.degree(v) == 0 ? 1 : 0)) out.push_back(v);
  }
  return out;
}

Multigraph k4_multigraph() { return gen::multigraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

}  // namespace

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), InvalidInput);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {0, 1}}), InvalidInput);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidInput);
  Graph g(3, {{2, 1}, {0, 2}});
  CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
  CHECK(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(0, 1));
}

TEST_CASE("induced subgraphs") {
  std::vector<Vertex> three{1, 2, 3};
  CHECK(induced_subgraph(gen::cycle(5), three).graph == gen::path(3));

  Graph g = gen::complete(4);
  std::vector<Vertex> all{0, 1, 2, 3};
  CHECK(induced_subgraph(g, all).graph == g);
  for (Vertex skip = 0; skip < 4; ++skip) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < 4; ++v) {
      if (v != skip) s.push_back(v);
    }
    auto sub = induced_subgraph(g, s);
    CHECK(sub.graph == gen::complete(3));
    CHECK(sub.original == s);
  }
  std::vector<Vertex> dup{3, 1, 3};
  CHECK(induced_subgraph(g, dup).original == std::vector<Vertex>{1, 3});
}

TEST_CASE("block decomposition") {
  SUBCASE("tree") {
    gen::Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
      Graph t = gen::random_tree(rng, gen::uniform(rng, 2, 14));
      auto bd = block_decomposition(t);
      CHECK(bd.blocks.size() == static_cast<std::size_t>(t.order() - 1));
      for (const auto& b : bd.blocks) CHECK(b.trivial());
      std::vector<Vertex> internal;
      for (Vertex v = 0; v < t.order(); ++v) {
        if (t.degree(v) >= 2) internal.push_back(v);
      }
      CHECK(bd.cutvertices == internal);
    }
  }
  SUBCASE("bowtie") {
    Graph g = gen::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    auto bd = block_decomposition(g);
    CHECK(bd.blocks.size() == 2);
    CHECK(bd.cutvertices == brute_cutvertices(g));
    CHECK(bd.cutvertices == std::vector<Vertex>{2});
  }
  SUBCASE("cycle") {
    auto bd = block_decomposition(gen::cycle(9));
    CHECK(bd.blocks.size() == 1);
    CHECK(bd.cutvertices.empty());
  }
  SUBCASE("random graphs against vertex deletion") {
    gen::Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      Graph g = gen::random_graph(rng, gen::uniform(rng, 1, 11), 0.3);
      auto bd = block_decomposition(g);
      CHECK(bd.cutvertices == brute_cutvertices(g));
      // Every non-isolated edge lies in exactly one block.
      std::size_t edges = 0;
      for (const auto& b : bd.blocks) edges += b.edges.size();
      CHECK(edges == g.edges().size());
    }
  }
}

TEST_CASE("thread contraction") {
  SUBCASE("cycle with one anchor") {
    std::vector<Vertex> anchors{0};
    auto tc = contract_threads(gen::cycle(9), anchors);
    REQUIRE(tc.threads.size() == 1);
    CHECK(tc.threads[0].is_cycle());
    CHECK(tc.threads[0].length() == 9);
    CHECK(tc.multigraph.edges() == std::vector<Edge>{{0, 0}});
  }
  SUBCASE("Sub3 of K4") {
    Multigraph k4 = k4_multigraph();
    Graph s = subdivide(k4, 3);
    CHECK(s.order() == 16);
    std::vector<Vertex> anchors{0, 1, 2, 3};
    auto tc = contract_threads(s, anchors);
    CHECK(tc.multigraph.sorted_edges() == k4.sorted_edges());
    for (const auto& t : tc.threads) CHECK(t.length() == 3);
  }
  SUBCASE("path between endpoints") {
    std::vector<Vertex> anchors{0, 4};
    auto tc = contract_threads(gen::path(5), anchors);
    REQUIRE(tc.threads.size() == 1);
    CHECK(tc.threads[0].length() == 4);
    CHECK(tc.multigraph.size() == 1);
  }
}

TEST_CASE("subdivision") {
  CHECK(subdivide(gen::multigraph(1, {{0, 0}}), 3) == gen::cycle(3));
  CHECK(subdivide(gen::multigraph(2, {{0, 1}}), 2) == gen::from_edges(3, {{0, 2}, {2, 1}}));
  Graph c9 = subdivide(gen::multigraph(3, {{0, 1}, {1, 2}, {0, 2}}), 3);
  CHECK(c9.order() == 9);
  CHECK(cycle_orders(c9) == std::vector<int>{9});
  // Parallel edges become separate threads.
  Graph theta = subdivide(gen::multigraph(2, {{0, 1}, {0, 1}, {0, 1}}), 2);
  CHECK(theta.order() == 5);
  CHECK(cycle_orders(theta) == std::vector<int>{4});
}

TEST_CASE("cycles and girth") {
  gen::Rng rng(3);
  Graph f = gen::random_forest(rng, 12);
  CHECK(cycle_orders(f).empty());
  CHECK_FALSE(girth(f).has_value());
  CHECK(cycle_orders(gen::complete(4)) == std::vector<int>{3, 4});
  CHECK(girth(gen::complete(4)) == 3);
  CHECK(cycle_orders(gen::cycle(9)) == std::vector<int>{9});
  CHECK_THROWS_AS(cycle_orders(gen::cycle(20), 16), ResourceExceeded);
  CHECK(multigraph_girth(gen::multigraph(1, {{0, 0}})) == 1);
  CHECK(multigraph_girth(gen::multigraph(2, {{0, 1}, {0, 1}})) == 2);
}

TEST_CASE("edge-list format") {
  Graph g = gen::cycle(5);
  CHECK(io::parse_edge_list(io::to_edge_list(g)) == g);
  CHECK(io::parse_edge_list("# c\n\n3 2\n0 1\n# x\n1 2\n") == gen::path(3));
  SUBCASE("errors carry the line") {
    try {
      io::parse_edge_list("3 2\n0 1\n0 7\n");
      FAIL("expected a format error");
    } catch (const FormatError& e) {
      CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(io::parse_edge_list("3 2\n0 1\n"), FormatError);
    CHECK_THROWS_AS(io::parse_edge_list("3 1\n1 0\n"), FormatError);
    CHECK_THROWS_AS(io::parse_edge_list("x\n"), FormatError);
  }
}

TEST_CASE("graph6 format") {
  CHECK(io::encode_graph6(gen::complete(4)) == "C~");
  CHECK(io::encode_graph6(Graph(1)) == "@");
  CHECK(io::decode_graph6("Bw") == gen::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}));
  gen::Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = gen::random_graph(rng, gen::uniform(rng, 0, 70), 0.2);
    CHECK(io::decode_graph6(io::encode_graph6(g)) == g);
  }
  std::istringstream in("Bw\n\nC~\n");
  CHECK(io::read_graph6_stream(in).size() == 2);
  std::istringstream bad("Bw\nC\n");
  try {
    io::read_graph6_stream(bad);
    FAIL("expected a format error");
  } catch (const FormatError& e) {
    CHECK(e.line() == 2);
  }
}
