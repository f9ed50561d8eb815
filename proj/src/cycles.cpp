#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <queue>

#include "kpath/error.hpp"
#include "kpath/graph.hpp"

namespace kpath {

// For each start s, reach[mask] holds the end vertices of simple paths from s
// that visit exactly `mask` (s is the least vertex of mask). A cycle of order
// |mask| exists when an end vertex is adjacent to s.
std::vector<int> cycle_orders(const Graph& g, int max_vertices) {
  const int n = g.order();
  if (n > max_vertices || n > 24) {
    throw ResourceExceeded("cycle enumeration limited to " + std::to_string(std::min(max_vertices, 24)) +
                           " vertices, graph has " + std::to_string(n));
  }
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  std::vector<bool> found(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::uint32_t> reach;
  for (int s = 0; s + 2 < n; ++s) {
    const std::uint32_t above = ~((2u << s) - 1u);  // vertices > s
    const std::uint32_t span = (n == 32) ? ~0u : ((1u << n) - 1u);
    reach.assign(std::size_t{1} << n, 0);
    reach[1u << s] = 1u << s;
    // Only masks containing s and otherwise vertices > s matter; they are
    // visited in increasing order since extensions only add bits.
    const std::uint32_t free_bits = above & span;
    for (std::uint32_t sub = 0;; sub = (sub - free_bits) & free_bits) {
      std::uint32_t mask = sub | (1u << s);
      std::uint32_t ends = reach[mask];
      if (ends) {
        int size = std::popcount(mask);
        if (size >= 3 && (ends & adj[s])) found[size] = true;
        for (std::uint32_t it = ends; it; it &= it - 1) {
          int v = std::countr_zero(it);
          std::uint32_t ext = adj[v] & free_bits & ~mask;
          for (; ext; ext &= ext - 1) {
            int w = std::countr_zero(ext);
            reach[mask | (1u << w)] |= 1u << w;
          }
        }
      }
      if (sub == free_bits) break;
    }
  }
  std::vector<int> orders;
  for (int len = 3; len <= n; ++len) {
    if (found[len]) orders.push_back(len);
  }
  return orders;
}

// Breadth-first search from every vertex; a non-tree edge closing at depths
// d(u), d(w) bounds the girth by d(u) + d(w) + 1 and the minimum is exact.
std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::queue<Vertex> queue;
    queue.push(s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::optional<int> multigraph_girth(const Multigraph& h) {
  auto sorted = h.sorted_edges();
  for (const auto& e : sorted) {
    if (e.u == e.v) return 1;
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return 2;
  return girth(Graph(h.order(), sorted));
}

}  // namespace kpath
