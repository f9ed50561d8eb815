#include <map>
#include <queue>

#include "kpath/canonical.hpp"
#include "kpath/error.hpp"
#include "kpath/harness.hpp"
#include "kpath/io.hpp"

namespace kpath {

namespace {

int distance(const Graph& g, Vertex from, Vertex to) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::queue<Vertex> queue;
  dist[from] = 0;
  queue.push(from);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    if (u == to) return dist[u];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push(w);
      }
    }
  }
  return -1;
}

}  // namespace

// Edge-by-edge closure: level m+1 is every graph obtained from level m by one
// more edge, deduplicated by canonical form. Without a girth bound only the
// lower half is generated and the rest are complements.
std::vector<Graph> enumerate_graphs(int n, bool connected, int min_girth, int cap) {
  if (n < 0) throw InvalidInput("negative order");
  if (n > cap || n > kMaxCanonicalOrder) {
    throw ResourceExceeded("order " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap));
  }
  const int total = n * (n - 1) / 2;
  const bool restricted = min_girth > 3;
  const int top = restricted ? total : total / 2;

  std::vector<std::vector<Graph>> levels{{Graph(n)}};
  for (int m = 0; m < top && !levels.back().empty(); ++m) {
    std::map<std::string, Graph> next;
    for (const Graph& g : levels.back()) {
      for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
          if (g.adjacent(u, v)) continue;
          if (restricted) {
            int d = distance(g, u, v);
            if (d >= 0 && d + 1 < min_girth) continue;
          }
          std::vector<Edge> edges = g.edges();
          edges.push_back({u, v});
          Graph c = canonical_form(Graph(n, std::move(edges)));
          next.emplace(io::encode_graph6(c), std::move(c));
        }
      }
    }
    std::vector<Graph> level;
    for (auto& [key, g] : next) level.push_back(std::move(g));
    levels.push_back(std::move(level));
  }
  if (!restricted) {
    for (int m = top + 1; m <= total; ++m) {
      std::map<std::string, Graph> mirrored;
      for (const Graph& g : levels[static_cast<std::size_t>(total - m)]) {
        Graph c = canonical_form(complement(g));
        mirrored.emplace(io::encode_graph6(c), std::move(c));
      }
      std::vector<Graph> level;
      for (auto& [key, g] : mirrored) level.push_back(std::move(g));
      levels.push_back(std::move(level));
    }
  }

  std::vector<Graph> out;
  for (auto& level : levels) {
    for (auto& g : level) {
      if (!connected || is_connected(g)) out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<Graph> enumerate_graphs(const EnumerationSpec& spec) {
  std::vector<Graph> out;
  for (int n = spec.min_n; n <= spec.max_n; ++n) {
    auto part = enumerate_graphs(n, spec.connected, spec.min_girth, spec.cap);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace kpath
