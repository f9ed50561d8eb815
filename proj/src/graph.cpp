#include "kpath/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "kpath/error.hpp"

namespace kpath {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
  if (n < 0) throw InvalidInput("negative vertex count");
}

Graph::Graph(int n, std::vector<Edge> edges) : Graph(n) {
  for (auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw InvalidInput("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                         " has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw InvalidInput("loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw InvalidInput("duplicate edge " + std::to_string(dup->u) + "-" + std::to_string(dup->v));
  }
  edges_ = std::move(edges);
  for (const auto& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

int Graph::min_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = (v == 0) ? degree(v) : std::min(best, degree(v));
  return best;
}

Multigraph::Multigraph(int n, std::vector<Edge> edges) : n_(n) {
  for (const auto& e : edges) add_edge(e.u, e.v);
}

int Multigraph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InvalidInput("multigraph edge endpoint out of range");
  if (u > v) std::swap(u, v);
  edges_.push_back({u, v});
  return static_cast<int>(edges_.size()) - 1;
}

int Multigraph::degree(Vertex v) const {
  int d = 0;
  for (const auto& e : edges_) d += (e.u == v) + (e.v == v);
  return d;
}

bool Multigraph::is_simple() const {
  auto sorted = sorted_edges();
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].u == sorted[i].v) return false;
    if (i > 0 && sorted[i] == sorted[i - 1]) return false;
  }
  return true;
}

namespace {

int count_components(int n, const std::vector<Edge>& edges) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (const auto& e : edges) {
    int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

}  // namespace

bool Multigraph::is_connected() const { return n_ > 0 && count_components(n_, edges_) == 1; }

int Multigraph::cyclomatic_number() const {
  return size() - n_ + count_components(n_, edges_);
}

std::vector<Edge> Multigraph::sorted_edges() const {
  auto sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  std::vector<Vertex> vertices(s.begin(), s.end());
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Vertex v = vertices[i];
    if (v < 0 || v >= g.order()) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
    index[v] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.push_back({index[e.u], index[e.v]});
  }
  return {Graph(static_cast<int>(vertices.size()), std::move(edges)), std::move(vertices)};
}

Graph remove_edges(const Graph& g, std::span<const Edge> removed) {
  std::vector<Edge> drop(removed.begin(), removed.end());
  for (auto& e : drop) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> kept;
  for (const auto& e : g.edges()) {
    if (!std::binary_search(drop.begin(), drop.end(), e)) kept.push_back(e);
  }
  return Graph(g.order(), std::move(kept));
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> result;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> component{s};
    seen[s] = true;
    for (std::size_t i = 0; i < component.size(); ++i) {
      for (Vertex w : g.neighbors(component[i])) {
        if (!seen[w]) {
          seen[w] = true;
          component.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    result.push_back(std::move(component));
  }
  return result;
}

bool is_connected(const Graph& g) { return g.order() > 0 && connected_components(g).size() == 1; }

bool is_forest(const Graph& g) {
  return g.size() == g.order() - static_cast<int>(connected_components(g).size());
}

namespace {

template <typename Neighbors>
std::optional<std::vector<int>> two_colour(int n, Neighbors&& neighbors) {
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int w : neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          queue.push(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

}  // namespace

std::optional<std::vector<int>> bipartition(const Graph& g) {
  return two_colour(g.order(), [&](int v) { return g.neighbors(v); });
}

std::optional<std::vector<int>> bipartition(const Multigraph& h) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(h.order()));
  for (const auto& e : h.edges()) {
    if (e.u == e.v) return std::nullopt;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return two_colour(h.order(), [&](int v) -> const std::vector<int>& { return adj[v]; });
}

std::string format_edges(const std::vector<Edge>& edges) {
  std::ostringstream out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out << ' ';
    out << edges[i].u << '-' << edges[i].v;
  }
  return out.str();
}

}  // namespace kpath
