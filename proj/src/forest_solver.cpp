#include <algorithm>
#include <queue>
#include <set>

#include "kpath/error.hpp"
#include "solver_detail.hpp"

namespace kpath {

const char* rule_name(RuleTag tag) {
  switch (tag) {
    case RuleTag::TreeRule:
      return "tree";
    case RuleTag::SubdivisionRule:
      return "subdivision";
    case RuleTag::EndblockRule:
      return "endblock";
    case RuleTag::EdgeDeletionRule:
      return "edge-deletion";
    case RuleTag::LeafBlockRule:
      return "leaf-block";
  }
  return "unknown";
}

int ReductionTrace::total() const {
  int sum = 0;
  for (const auto& s : steps) sum += s.delta;
  return sum;
}

namespace detail {

std::optional<TreeStep> find_tree_step(const Graph& work, int k, const std::vector<bool>& alive) {
  const int n = work.order();
  // Peel to the 2-core; what is left outside it hangs off single core vertices.
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<bool> core(static_cast<std::size_t>(n), true);
  std::queue<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = work.degree(v);
    if (deg[v] <= 1) {
      core[v] = false;
      queue.push(v);
    }
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (Vertex w : work.neighbors(v)) {
      if (core[w] && --deg[w] <= 1) {
        core[w] = false;
        queue.push(w);
      }
    }
  }

  std::vector<bool> claimed(static_cast<std::size_t>(n), false);
  std::vector<int> depth(static_cast<std::size_t>(n)), down(static_cast<std::size_t>(n)),
      within(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  // Core roots first, so that hanging trees are rooted at their core vertex;
  // whatever is still unclaimed afterwards is a tree component.
  std::vector<Vertex> roots;
  for (Vertex r = 0; r < n; ++r) {
    if (core[r]) roots.push_back(r);
  }
  for (Vertex r = 0; r < n; ++r) {
    if (!core[r]) roots.push_back(r);
  }
  for (Vertex r : roots) {
    if (claimed[r] || !alive[r]) continue;
    if (core[r]) {
      bool hangs = false;
      for (Vertex w : work.neighbors(r)) hangs = hangs || !core[w];
      if (!hangs) continue;
    }
    // BFS over the tree rooted at r; a core root only descends into non-core vertices.
    std::vector<Vertex> order{r};
    parent[r] = -1;
    depth[r] = 0;
    claimed[r] = !core[r];
    for (std::size_t i = 0; i < order.size(); ++i) {
      Vertex u = order[i];
      for (Vertex w : work.neighbors(u)) {
        if (w == parent[u] || core[w]) continue;
        parent[w] = u;
        depth[w] = depth[u] + 1;
        claimed[w] = true;
        order.push_back(w);
      }
    }
    auto children = [&](Vertex u) {
      std::vector<Vertex> c;
      for (Vertex w : work.neighbors(u)) {
        if (w != parent[u] && !core[w]) c.push_back(w);
      }
      std::sort(c.begin(), c.end(), [&](Vertex a, Vertex b) { return down[a] != down[b] ? down[a] > down[b] : a < b; });
      return c;
    };
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      Vertex u = *it;
      int top1 = 0, top2 = 0, best = 0;
      for (Vertex w : work.neighbors(u)) {
        if (w == parent[u] || core[w]) continue;
        best = std::max(best, within[w]);
        if (down[w] > top1) {
          top2 = top1;
          top1 = down[w];
        } else {
          top2 = std::max(top2, down[w]);
        }
      }
      down[u] = 1 + top1;
      within[u] = std::max(best, 1 + top1 + top2);
    }
    Vertex x = -1;
    for (Vertex u : order) {
      if (within[u] >= k && (x < 0 || depth[u] > depth[x] || (depth[u] == depth[x] && u < x))) x = u;
    }
    if (x < 0) continue;

    auto chain = [&](Vertex start) {
      std::vector<Vertex> c{start};
      for (auto next = children(start); !next.empty(); next = children(c.back())) c.push_back(next.front());
      return c;
    };
    auto kids = children(x);
    std::vector<Vertex> first = kids.empty() ? std::vector<Vertex>{} : chain(kids[0]);
    std::vector<Vertex> second = kids.size() < 2 ? std::vector<Vertex>{} : chain(kids[1]);
    const std::size_t a = std::min<std::size_t>(first.size(), static_cast<std::size_t>(k - 1));
    const std::size_t b = static_cast<std::size_t>(k - 1) - a;
    std::vector<Vertex> seq(first.rend() - static_cast<std::ptrdiff_t>(a), first.rend());
    seq.push_back(x);
    seq.insert(seq.end(), second.begin(), second.begin() + static_cast<std::ptrdiff_t>(b));

    TreeStep step;
    step.x = x;
    step.path = canonical_path(std::move(seq));
    std::vector<Vertex> stack{x};
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      step.removed.push_back(u);
      for (Vertex w : work.neighbors(u)) {
        if (w != parent[u] && !core[w]) stack.push_back(w);
      }
    }
    std::sort(step.removed.begin(), step.removed.end());
    return step;
  }
  return std::nullopt;
}

Reduction::Reduction(const Graph& g, int k)
    : g_(g), k_(k), work_(g), alive_(static_cast<std::size_t>(g.order()), true) {}

void Reduction::record(TraceStep step) {
  std::vector<bool> gone(static_cast<std::size_t>(work_.order()), false);
  for (Vertex v : step.removed_vertices) gone[v] = true, alive_[v] = false;
  std::vector<Edge> drop = step.removed_edges;
  for (const auto& e : work_.edges()) {
    if (gone[e.u] || gone[e.v]) drop.push_back(e);
  }
  work_ = remove_edges(work_, drop);
  std::sort(step.cover.begin(), step.cover.end());
  trace_.steps.push_back(std::move(step));
}

void Reduction::apply_tree_step(TreeStep s) {
  TraceStep step;
  step.rule = RuleTag::TreeRule;
  step.removed_vertices = std::move(s.removed);
  step.paths.push_back(std::move(s.path));
  step.cover.push_back(s.x);
  step.delta = 1;
  record(std::move(step));
}

void Reduction::defer(std::function<std::map<Vertex, Vertex>(const std::vector<bool>&)> fixup) {
  fixups_.push_back(std::move(fixup));
}

SolveResult Reduction::finish(std::string method) {
  const std::size_t n = static_cast<std::size_t>(g_.order());
  for (auto it = fixups_.rbegin(); it != fixups_.rend(); ++it) {
    std::vector<bool> in_cover(n, false);
    for (const auto& s : trace_.steps) {
      for (Vertex v : s.cover) in_cover[v] = true;
    }
    auto swap = (*it)(in_cover);
    if (swap.empty()) continue;
    std::vector<bool> taken(n, false);
    for (auto& s : trace_.steps) {
      std::vector<Vertex> next;
      for (Vertex v : s.cover) {
        auto found = swap.find(v);
        Vertex w = found == swap.end() ? v : found->second;
        if (!taken[w]) next.push_back(w);
        taken[w] = true;
      }
      std::sort(next.begin(), next.end());
      s.cover = std::move(next);
    }
  }

  SolveResult result;
  std::vector<KPath> paths;
  std::vector<Vertex> cover;
  for (const auto& s : trace_.steps) {
    paths.insert(paths.end(), s.paths.begin(), s.paths.end());
    cover.insert(cover.end(), s.cover.begin(), s.cover.end());
  }
  result.matching = make_matching(std::move(paths));
  result.cover = make_cover(std::move(cover));
  if (auto defect = check_matching(g_, k_, result.matching)) throw Error("internal: " + method + ": " + *defect);
  if (auto defect = check_cover(g_, k_, result.cover)) throw Error("internal: " + method + ": " + *defect);
  if (result.matching.size() != result.cover.size() || trace_.total() != result.matching.size()) {
    throw Error("internal: " + method + " produced certificates of different sizes");
  }
  result.nu = result.tau = result.matching.size();
  result.trace = std::move(trace_);
  result.method = std::move(method);
  return result;
}

}  // namespace detail

SolveResult solve_forest(const Graph& g, int k) {
  if (k < 1) throw InvalidInput("k must be positive");
  if (!is_forest(g)) throw InvalidInput("forest solver input has a cycle");
  detail::Reduction r(g, k);
  while (auto step = detail::find_tree_step(r.work(), k, r.alive())) r.apply_tree_step(std::move(*step));
  return r.finish("forest");
}

}  // namespace kpath
