#include "kpath/paths.hpp"

#include <algorithm>
#include <functional>

#include "kpath/error.hpp"

namespace kpath {

KPath canonical_path(std::vector<Vertex> vertices) {
  if (vertices.size() > 1 && vertices.front() > vertices.back()) std::reverse(vertices.begin(), vertices.end());
  return KPath{std::move(vertices)};
}

namespace {

// Depth-first extension in ascending neighbour order, so sequences starting at
// a fixed vertex are produced in lexicographic order. `visit` returns false to stop.
bool for_each_kpath(const Graph& g, int k, const std::function<bool(const std::vector<Vertex>&)>& visit) {
  if (k < 1) throw InvalidInput("k must be positive");
  const int n = g.order();
  std::vector<Vertex> stack;
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);
  std::function<bool(Vertex)> extend = [&](Vertex v) -> bool {
    if (static_cast<int>(stack.size()) == k) {
      if (k == 1 || stack.front() < stack.back()) return visit(stack);
      return true;
    }
    for (Vertex w : g.neighbors(v)) {
      if (on_path[w]) continue;
      on_path[w] = true;
      stack.push_back(w);
      bool go_on = extend(w);
      stack.pop_back();
      on_path[w] = false;
      if (!go_on) return false;
    }
    return true;
  };
  for (Vertex s = 0; s < n; ++s) {
    stack.assign(1, s);
    on_path[s] = true;
    bool go_on = extend(s);
    on_path[s] = false;
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

std::vector<KPath> enumerate_kpaths(const Graph& g, int k, std::size_t limit) {
  std::vector<KPath> paths;
  for_each_kpath(g, k, [&](const std::vector<Vertex>& p) {
    if (paths.size() == limit) {
      throw ResourceExceeded("more than " + std::to_string(limit) + " " + std::to_string(k) + "-paths");
    }
    paths.push_back(KPath{p});
    return true;
  });
  return paths;  // already lexicographic: starts ascend, extensions ascend
}

int forest_longest_path(const Graph& forest) {
  const int n = forest.order();
  if (n == 0) return 0;
  // Longest path in vertices through each rooted subtree, by post-order.
  std::vector<int> down(static_cast<std::size_t>(n), 0), parent(static_cast<std::size_t>(n), -2);
  int best = 1;
  std::vector<Vertex> order;
  for (Vertex root = 0; root < n; ++root) {
    if (parent[root] != -2) continue;
    parent[root] = -1;
    std::vector<Vertex> stack{root};
    order.clear();
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (Vertex w : forest.neighbors(v)) {
        if (w == parent[v]) continue;
        if (parent[w] != -2) throw InvalidInput("graph is not a forest");
        parent[w] = v;
        stack.push_back(w);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      Vertex v = *it;
      int top1 = 0, top2 = 0;
      for (Vertex w : forest.neighbors(v)) {
        if (w == parent[v]) continue;
        if (down[w] > top1) {
          top2 = top1;
          top1 = down[w];
        } else if (down[w] > top2) {
          top2 = down[w];
        }
      }
      down[v] = top1 + 1;
      best = std::max(best, top1 + top2 + 1);
    }
  }
  return best;
}

bool has_kpath(const Graph& g, int k) {
  if (k < 1) throw InvalidInput("k must be positive");
  if (k > g.order()) return false;
  if (k == 1) return true;
  if (g.size() < k - 1) return false;
  if (is_forest(g)) return forest_longest_path(g) >= k;
  return find_kpath(g, k).has_value();
}

std::optional<KPath> find_kpath(const Graph& g, int k) {
  std::optional<KPath> found;
  for_each_kpath(g, k, [&](const std::vector<Vertex>& p) {
    found = KPath{p};
    return false;
  });
  return found;
}

std::optional<std::string> check_path(const Graph& g, int k, const KPath& path) {
  if (path.order() != k) {
    return "path has " + std::to_string(path.order()) + " vertices, expected " + std::to_string(k);
  }
  std::vector<Vertex> sorted = path.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= g.order())) return std::string("vertex out of range");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::string("repeated vertex in path");
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    if (!g.adjacent(path.vertices[i], path.vertices[i + 1])) {
      return "missing edge " + std::to_string(path.vertices[i]) + "-" + std::to_string(path.vertices[i + 1]);
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_matching(const Graph& g, int k, const KMatching& matching) {
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  for (const auto& p : matching.paths) {
    if (auto defect = check_path(g, k, p)) return defect;
    for (Vertex v : p.vertices) {
      if (used[v]) return "vertex " + std::to_string(v) + " lies on two paths";
      used[v] = true;
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_cover(const Graph& g, int k, const KVertexCover& cover) {
  std::vector<bool> removed(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : cover.vertices) {
    if (v < 0 || v >= g.order()) return std::string("cover vertex out of range");
    if (removed[v]) return "cover repeats vertex " + std::to_string(v);
    removed[v] = true;
  }
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!removed[v]) rest.push_back(v);
  }
  auto sub = induced_subgraph(g, rest);
  if (!has_kpath(sub.graph, k)) return std::nullopt;
  if (auto p = find_kpath(sub.graph, k)) {
    std::string text = "uncovered path";
    for (Vertex v : p->vertices) text += " " + std::to_string(sub.original[v]);
    return text;
  }
  return std::nullopt;
}

KMatching make_matching(std::vector<KPath> paths) {
  for (auto& p : paths) p = canonical_path(std::move(p.vertices));
  std::sort(paths.begin(), paths.end());
  return KMatching{std::move(paths)};
}

KVertexCover make_cover(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return KVertexCover{std::move(vertices)};
}

}  // namespace kpath
