#include <algorithm>
#include <queue>
#include <utility>

#include "kpath/error.hpp"
#include "solver_detail.hpp"

namespace kpath {

BipartiteCertificate bipartite_matching(const Multigraph& h, const std::vector<int>& side) {
  const int n = h.order();
  if (static_cast<int>(side.size()) != n) throw InvalidInput("bipartition has the wrong length");
  for (int s : side) {
    if (s != 0 && s != 1) throw InvalidInput("bipartition sides must be 0 or 1");
  }
  // adj[u] for u on side 0: (neighbour, least edge index), parallel edges collapsed.
  std::vector<std::vector<std::pair<Vertex, int>>> adj(static_cast<std::size_t>(n));
  for (int i = 0; i < h.size(); ++i) {
    Edge e = h.edges()[i];
    if (e.u == e.v) throw InvalidInput("loop at vertex " + std::to_string(e.u) + " in a bipartite matching input");
    if (side[e.u] == side[e.v]) {
      throw InvalidInput("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " inside one side");
    }
    if (side[e.u] == 1) std::swap(e.u, e.v);
    adj[e.u].emplace_back(e.v, i);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end(),
                           [](const auto& a, const auto& b) { return a.first == b.first; }),
               list.end());
  }

  std::vector<int> mate(static_cast<std::size_t>(n), -1), mate_edge(static_cast<std::size_t>(n), -1);
  std::vector<int> seen(static_cast<std::size_t>(n), -1);
  auto augment = [&](auto&& self, Vertex u, int round) -> bool {
    for (auto [v, idx] : adj[u]) {
      if (seen[v] == round) continue;
      seen[v] = round;
      if (mate[v] < 0 || self(self, mate[v], round)) {
        mate[v] = u;
        mate[u] = v;
        mate_edge[v] = mate_edge[u] = idx;
        return true;
      }
    }
    return false;
  };
  for (Vertex u = 0; u < n; ++u) {
    if (side[u] == 0) augment(augment, u, u);
  }

  // Alternating reachability from unmatched side-0 vertices.
  std::vector<bool> reach(static_cast<std::size_t>(n), false);
  std::queue<Vertex> queue;
  for (Vertex u = 0; u < n; ++u) {
    if (side[u] == 0 && mate[u] < 0) {
      reach[u] = true;
      queue.push(u);
    }
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (auto [v, idx] : adj[u]) {
      if (reach[v]) continue;
      reach[v] = true;
      if (mate[v] >= 0 && !reach[mate[v]]) {
        reach[mate[v]] = true;
        queue.push(mate[v]);
      }
    }
  }

  BipartiteCertificate cert;
  for (Vertex v = 0; v < n; ++v) {
    if (side[v] == 0 && mate[v] >= 0) cert.edges.push_back(mate_edge[v]);
    if ((side[v] == 0) != reach[v]) cert.cover.push_back(v);
  }
  std::sort(cert.edges.begin(), cert.edges.end());
  for (int idx : cert.edges) {
    Edge e = h.edges()[idx];
    cert.matching.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  if (cert.matching.size() != cert.cover.size()) throw Error("internal: matching and cover sizes differ");
  return cert;
}

BipartiteCertificate bipartite_matching(const Graph& g, const std::vector<int>& side) {
  return bipartite_matching(Multigraph(g.order(), g.edges()), side);
}

std::vector<int> matching_edge_assignment(const Multigraph& h) {
  const int n = h.order();
  if (n == 0 || !h.is_connected()) throw InvalidInput("edge assignment needs a connected multigraph");
  if (h.cyclomatic_number() < 1) throw InvalidInput("edge assignment needs a multigraph with a cycle");

  std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
  for (int i = 0; i < h.size(); ++i) {
    incident[h.edges()[i].u].push_back(i);
    if (h.edges()[i].v != h.edges()[i].u) incident[h.edges()[i].v].push_back(i);
  }
  auto other = [&](int idx, Vertex u) { return h.edges()[idx].u == u ? h.edges()[idx].v : h.edges()[idx].u; };
  // BFS avoiding edge `skip`; parent[v] is the tree edge into v.
  auto bfs = [&](Vertex root, int skip, std::vector<int>& parent) {
    parent.assign(static_cast<std::size_t>(n), -2);
    parent[root] = -1;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      for (int idx : incident[u]) {
        Vertex w = other(idx, u);
        if (idx == skip || parent[w] != -2) continue;
        parent[w] = idx;
        queue.push(w);
      }
    }
  };

  std::vector<int> parent;
  int chosen = -1;
  for (int i = 0; i < h.size() && chosen < 0; ++i) {
    const Edge e = h.edges()[i];
    if (e.u == e.v) {
      chosen = i;
      break;
    }
    bfs(e.u, i, parent);
    if (parent[e.v] != -2) chosen = i;
  }
  const Edge e = h.edges()[chosen];
  const Vertex r = std::min(e.u, e.v);
  bfs(r, chosen, parent);

  std::vector<int> f(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(h.size()), false);
  for (Vertex u = 0; u < n; ++u) {
    f[u] = u == r ? chosen : parent[u];
    if (f[u] < 0) throw Error("internal: spanning tree misses a vertex");
    const Edge fe = h.edges()[f[u]];
    if (used[f[u]] || (fe.u != u && fe.v != u)) throw Error("internal: edge assignment is not injective");
    used[f[u]] = true;
  }
  return f;
}

namespace detail {

ContractedAssignment contracted_assignment(const Multigraph& h, const std::vector<int>& matching) {
  const int n = h.order();
  ContractedAssignment out;
  out.node_of.assign(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> partner(static_cast<std::size_t>(n), -1);
  std::vector<bool> in_m(static_cast<std::size_t>(h.size()), false);
  for (int idx : matching) {
    in_m[idx] = true;
    partner[h.edges()[idx].u] = h.edges()[idx].v;
    partner[h.edges()[idx].v] = h.edges()[idx].u;
  }
  int nodes = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (out.node_of[v] >= 0) continue;
    out.node_of[v] = nodes;
    if (partner[v] >= 0) out.node_of[partner[v]] = nodes;
    ++nodes;
  }
  Multigraph c(nodes);
  std::vector<int> origin;
  for (int i = 0; i < h.size(); ++i) {
    if (in_m[i]) continue;
    int a = out.node_of[h.edges()[i].u], b = out.node_of[h.edges()[i].v];
    c.add_edge(std::min(a, b), std::max(a, b));
    origin.push_back(i);
  }
  auto f = matching_edge_assignment(c);
  for (int fe : f) out.f_node.push_back(origin[fe]);
  for (int idx : matching) out.f_matched.push_back(out.f_node[out.node_of[h.edges()[idx].u]]);
  return out;
}

KPath matched_edge_path(const HostedMultigraph& s, int e, int f) {
  const Edge me = s.h.edges()[e], fe = s.h.edges()[f];
  const Vertex w = (fe.u == me.u || fe.u == me.v) ? fe.u : fe.v;
  if (w != me.u && w != me.v) throw Error("internal: assigned edge is not adjacent");
  const Vertex start = me.u == w ? me.v : me.u;
  std::vector<Vertex> seq{s.host[start]};
  std::vector<Vertex> inner = s.interiors[e];
  if (me.u != start) std::reverse(inner.begin(), inner.end());
  seq.insert(seq.end(), inner.begin(), inner.end());
  seq.push_back(s.host[w]);
  inner = s.interiors[f];
  if (fe.u != w) std::reverse(inner.begin(), inner.end());
  seq.insert(seq.end(), inner.begin(), inner.end());
  return canonical_path(std::move(seq));
}

}  // namespace detail

std::pair<KMatching, KVertexCover> bip_half_subdivision_certificates(const Multigraph& h, int k) {
  if (k < 2 || k % 2 != 0) throw InvalidInput("the bipartite construction needs an even k >= 2");
  auto side = bipartition(h);
  if (!side) throw InvalidInput("multigraph is not bipartite");
  if (!h.is_connected() || h.cyclomatic_number() < 1) {
    throw InvalidInput("the bipartite construction needs a connected multigraph with a cycle");
  }
  const int half = k / 2;
  Graph sub = subdivide(h, half);

  detail::HostedMultigraph s{h, {}, {}};
  for (Vertex v = 0; v < h.order(); ++v) s.host.push_back(v);
  Vertex next = h.order();
  for (int i = 0; i < h.size(); ++i) {
    std::vector<Vertex> inner;
    for (int j = 0; j < half - 1; ++j) inner.push_back(next++);
    s.interiors.push_back(std::move(inner));
  }

  auto cert = bipartite_matching(h, *side);
  auto assignment = detail::contracted_assignment(h, cert.edges);
  std::vector<KPath> paths;
  for (std::size_t i = 0; i < cert.edges.size(); ++i) {
    paths.push_back(detail::matched_edge_path(s, cert.edges[i], assignment.f_matched[i]));
  }
  auto matching = make_matching(std::move(paths));
  auto cover = make_cover(cert.cover);
  if (auto defect = check_matching(sub, k, matching)) throw Error("internal: " + *defect);
  if (auto defect = check_cover(sub, k, cover)) throw Error("internal: " + *defect);
  return {std::move(matching), std::move(cover)};
}

}  // namespace kpath
