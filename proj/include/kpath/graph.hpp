#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kpath {

using Vertex = int;

/// Unordered pair; simple graphs store it with u < v, multigraphs with u <= v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// The edge list is kept sorted with the smaller endpoint first, so equal
/// graphs compare and serialize identically. Adjacency lists are sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws InvalidInput on loops, duplicate edges, or endpoints outside 0..n-1.
  Graph(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;
  int min_degree() const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Finite undirected multigraph; an edge (u,u) is a loop. Edge order is
/// insertion order and edge indices are stable.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int n) : n_(n) {}
  Multigraph(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  int add_vertex() { return n_++; }
  int add_edge(Vertex u, Vertex v);
  /// Loops count twice.
  int degree(Vertex v) const;
  bool is_simple() const;
  bool is_connected() const;
  /// |E| - |V| + #components.
  int cyclomatic_number() const;
  /// Edge multiset with endpoints normalised and sorted; the labeled comparison key.
  std::vector<Edge> sorted_edges() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Result of restricting a graph to a vertex set; original[i] is the host id of vertex i.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;
};

/// Vertices are relabeled 0..|s|-1 by ascending host id. Duplicates in s are ignored.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

/// Graph on the same vertex set without the listed edges.
Graph remove_edges(const Graph& g, std::span<const Edge> removed);

struct Block {
  std::vector<Vertex> vertices;  // sorted
  std::vector<Edge> edges;       // sorted
  bool trivial() const noexcept { return vertices.size() <= 2; }
};

struct BlockDecomposition {
  std::vector<Block> blocks;  // sorted by vertex list
  std::vector<Vertex> cutvertices;
  /// block_cutvertices[b]: the cutvertices lying in block b (the block-cut tree adjacency).
  std::vector<std::vector<Vertex>> block_cutvertices;
  std::vector<bool> is_cut;  // indexed by vertex

  bool is_cutvertex(Vertex v) const { return is_cut[v]; }
};

BlockDecomposition block_decomposition(const Graph& g);

/// A maximal path whose interior vertices have degree 2. from == to marks a
/// cycle thread closing at a single anchor.
struct Thread {
  Vertex from = 0;
  Vertex to = 0;
  std::vector<Vertex> interior;  // ordered from `from` to `to`

  int length() const noexcept { return static_cast<int>(interior.size()) + 1; }
  bool is_cycle() const noexcept { return from == to; }
};

struct ThreadContraction {
  Multigraph multigraph;        // vertex i is anchors[i]
  std::vector<Vertex> anchors;  // sorted host ids
  std::vector<Thread> threads;  // threads[e] realises multigraph edge e
};

/// Contracts every thread of g between anchors. Every vertex of degree other
/// than 2 must be an anchor; each 2-regular component needs an anchor.
ThreadContraction contract_threads(const Graph& g, std::span<const Vertex> anchors);

/// Sub_k(h): non-loop edges become paths with k-1 new interior vertices and
/// loops become k-cycles. New vertices are numbered after h's, in edge order.
Graph subdivide(const Multigraph& h, int k);

/// Sorted set of cycle orders. Exponential; throws ResourceExceeded when g has
/// more than max_vertices vertices.
std::vector<int> cycle_orders(const Graph& g, int max_vertices = 16);

/// Shortest cycle order, nullopt for forests.
std::optional<int> girth(const Graph& g);
/// Loops have girth 1 and parallel pairs girth 2.
std::optional<int> multigraph_girth(const Multigraph& h);

std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
/// side[v] in {0,1} when g is bipartite.
std::optional<std::vector<int>> bipartition(const Graph& g);
std::optional<std::vector<int>> bipartition(const Multigraph& h);

/// "u-v u-v ..." in edge order, for witnesses and logs.
std::string format_edges(const std::vector<Edge>& edges);

}  // namespace kpath
