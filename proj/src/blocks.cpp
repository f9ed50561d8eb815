#include <algorithm>

#include "kpath/graph.hpp"

namespace kpath {

// Hopcroft-Tarjan with an explicit stack; edges are popped into a block when
// low[child] >= disc[parent].
BlockDecomposition block_decomposition(const Graph& g) {
  const int n = g.order();
  BlockDecomposition result;
  result.is_cut.assign(static_cast<std::size_t>(n), false);

  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edge_stack;
  std::vector<std::vector<Edge>> raw_blocks;
  int timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    if (g.degree(root) == 0) {
      disc[root] = timer++;
      result.blocks.push_back({{root}, {}});
      continue;
    }
    int root_children = 0;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& top = stack.back();
      auto nbrs = g.neighbors(top.v);
      if (top.next < nbrs.size()) {
        Vertex w = nbrs[top.next++];
        if (w == top.parent) continue;
        if (disc[w] == -1) {
          edge_stack.push_back({top.v, w});
          disc[w] = low[w] = timer++;
          if (top.v == root) ++root_children;
          stack.push_back({w, top.v, 0});
        } else if (disc[w] < disc[top.v]) {
          edge_stack.push_back({top.v, w});
          low[top.v] = std::min(low[top.v], disc[w]);
        }
        continue;
      }
      Vertex v = top.v, parent = top.parent;
      stack.pop_back();
      if (parent < 0) continue;
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] >= disc[parent]) {
        if (parent != root) result.is_cut[parent] = true;
        std::vector<Edge> block;
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if ((e.u == parent && e.v == v) || (e.u == v && e.v == parent)) break;
        }
        raw_blocks.push_back(std::move(block));
      }
    }
    if (root_children >= 2) result.is_cut[root] = true;
  }

  for (auto& edges : raw_blocks) {
    Block block;
    for (auto& e : edges) {
      if (e.u > e.v) std::swap(e.u, e.v);
      block.vertices.push_back(e.u);
      block.vertices.push_back(e.v);
    }
    std::sort(edges.begin(), edges.end());
    std::sort(block.vertices.begin(), block.vertices.end());
    block.vertices.erase(std::unique(block.vertices.begin(), block.vertices.end()), block.vertices.end());
    block.edges = std::move(edges);
    result.blocks.push_back(std::move(block));
  }
  std::sort(result.blocks.begin(), result.blocks.end(),
            [](const Block& a, const Block& b) { return a.vertices < b.vertices; });

  for (Vertex v = 0; v < n; ++v) {
    if (result.is_cut[v]) result.cutvertices.push_back(v);
  }
  for (const auto& block : result.blocks) {
    std::vector<Vertex> cuts;
    for (Vertex v : block.vertices) {
      if (result.is_cut[v]) cuts.push_back(v);
    }
    result.block_cutvertices.push_back(std::move(cuts));
  }
  return result;
}

}  // namespace kpath
