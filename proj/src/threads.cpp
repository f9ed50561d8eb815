#include <algorithm>

#include "kpath/error.hpp"
#include "kpath/graph.hpp"

namespace kpath {

namespace {

std::size_t edge_index(const Graph& g, Vertex a, Vertex b) {
  Edge key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(g.edges().begin(), g.edges().end(), key);
  return static_cast<std::size_t>(it - g.edges().begin());
}

}  // namespace

ThreadContraction contract_threads(const Graph& g, std::span<const Vertex> anchors_in) {
  const int n = g.order();
  std::vector<Vertex> anchors(anchors_in.begin(), anchors_in.end());
  std::sort(anchors.begin(), anchors.end());
  anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());

  std::vector<int> anchor_index(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    if (anchors[i] < 0 || anchors[i] >= n) throw InvalidInput("anchor out of range");
    anchor_index[anchors[i]] = static_cast<int>(i);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 2 && anchor_index[v] < 0) {
      throw InvalidInput("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                         " but is not an anchor");
    }
  }

  ThreadContraction result;
  result.multigraph = Multigraph(static_cast<int>(anchors.size()));
  std::vector<bool> used(static_cast<std::size_t>(g.size()), false);
  std::vector<bool> covered(static_cast<std::size_t>(n), false);

  for (Vertex a : anchors) {
    covered[a] = true;
    for (Vertex first : g.neighbors(a)) {
      if (used[edge_index(g, a, first)]) continue;
      used[edge_index(g, a, first)] = true;
      Thread thread;
      thread.from = a;
      Vertex prev = a, cur = first;
      while (anchor_index[cur] < 0) {
        thread.interior.push_back(cur);
        covered[cur] = true;
        auto nbrs = g.neighbors(cur);
        Vertex next = (nbrs[0] == prev) ? nbrs[1] : nbrs[0];
        used[edge_index(g, cur, next)] = true;
        prev = cur;
        cur = next;
      }
      thread.to = cur;
      result.multigraph.add_edge(anchor_index[a], anchor_index[cur]);
      result.threads.push_back(std::move(thread));
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!covered[v]) {
      throw InvalidInput("vertex " + std::to_string(v) + " lies on a cycle component without an anchor");
    }
  }
  result.anchors = std::move(anchors);
  return result;
}

Graph subdivide(const Multigraph& h, int k) {
  if (k < 1) throw InvalidInput("subdivision parameter must be positive");
  if (k == 1) {
    if (!h.is_simple()) throw InvalidInput("Sub_1 of a non-simple multigraph is not a simple graph");
    return Graph(h.order(), h.edges());
  }
  std::vector<Edge> edges;
  int next = h.order();
  for (const auto& e : h.edges()) {
    if (e.u == e.v && k < 3) throw InvalidInput("a loop needs k >= 3 to become a simple cycle");
    Vertex prev = e.u;
    for (int i = 0; i < k - 1; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, e.v});
  }
  return Graph(next, std::move(edges));
}

}  // namespace kpath
