#include "kpath/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "kpath/error.hpp"
#include "kpath/io.hpp"

namespace kpath {

namespace {

using Key = std::array<std::uint64_t, 2>;
using Cells = std::vector<std::vector<Vertex>>;

struct Search {
  int n = 0;
  std::vector<std::uint32_t> adj;  // neighbourhood bitmasks
  Key best{};
  std::vector<Vertex> best_order;
  bool found = false;

  bool edge(Vertex a, Vertex b) const { return (adj[a] >> b) & 1u; }

  // Splits cells by neighbour counts into each splitter until nothing changes.
  void refine(Cells& cells) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
        std::uint32_t splitter = 0;
        for (Vertex v : cells[s]) splitter |= 1u << v;
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (cells[c].size() < 2) continue;
          std::vector<std::pair<int, Vertex>> counted;
          for (Vertex v : cells[c]) counted.emplace_back(__builtin_popcount(adj[v] & splitter), v);
          std::sort(counted.begin(), counted.end());
          if (counted.front().first == counted.back().first) continue;
          Cells parts;
          for (std::size_t i = 0; i < counted.size(); ++i) {
            if (i == 0 || counted[i].first != counted[i - 1].first) parts.emplace_back();
            parts.back().push_back(counted[i].second);
          }
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), parts.begin(), parts.end());
          changed = true;
          break;
        }
      }
    }
  }

  Key key_of(const std::vector<Vertex>& order) const {
    Key key{};
    int bit = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i, ++bit) {
        if (edge(order[i], order[j])) key[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
      }
    }
    return key;
  }

  bool twins(Vertex a, Vertex b) const {
    const std::uint32_t mask = ~((1u << a) | (1u << b));
    return (adj[a] & mask) == (adj[b] & mask);
  }

  void descend(Cells cells) {
    refine(cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      std::vector<Vertex> order;
      for (const auto& c : cells) order.push_back(c[0]);
      Key key = key_of(order);
      if (!found || key > best) {
        best = key;
        best_order = std::move(order);
        found = true;
      }
      return;
    }
    const std::size_t t = static_cast<std::size_t>(target - cells.begin());
    const std::vector<Vertex> cell = cells[t];
    std::vector<Vertex> tried;
    for (Vertex v : cell) {
      // Swapping twins is an automorphism fixing the partition: one branch suffices.
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(u, v); })) continue;
      tried.push_back(v);
      Cells next = cells;
      next[t].erase(std::find(next[t].begin(), next[t].end(), v));
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(t), std::vector<Vertex>{v});
      descend(std::move(next));
    }
  }
};

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalOrder) throw ResourceExceeded("canonical labelling supports at most 16 vertices");
  Search s;
  s.n = n;
  s.adj.assign(static_cast<std::size_t>(n), 0);
  for (const auto& e : g.edges()) {
    s.adj[e.u] |= 1u << e.v;
    s.adj[e.v] |= 1u << e.u;
  }
  Cells start;
  if (n > 0) {
    start.emplace_back();
    for (Vertex v = 0; v < n; ++v) start[0].push_back(v);
  }
  s.descend(std::move(start));
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[s.best_order[i]] = i;
  return perm;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    Vertex a = perm[e.u], b = perm[e.v];
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return Graph(g.order(), std::move(edges));
}

Graph canonical_form(const Graph& g) { return relabel(g, canonical_labeling(g)); }

std::string canonical_key(const Graph& g) { return io::encode_graph6(canonical_form(g)); }

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < g.order(); ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (!g.adjacent(u, v)) edges.push_back({u, v});
    }
  }
  return Graph(g.order(), std::move(edges));
}

}  // namespace kpath
