#include <algorithm>

#include "kpath/error.hpp"
#include "solver_detail.hpp"

namespace kpath {

namespace {

bool contains(const std::vector<Vertex>& sorted, Vertex v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

// K4 and T(2) endblocks: one 4-path inside B, and the cutvertex (or a vertex of
// degree 3 when B is a whole component) covers every path meeting B.
bool endblock_rule(detail::Reduction& r, const RecognitionReport& report, const BlockDecomposition& bd) {
  for (std::size_t i = 0; i < report.blocks.size(); ++i) {
    const auto kind = report.blocks[i].kind;
    if (kind != BlockKind::K4Endblock && kind != BlockKind::T2Endblock) continue;
    const Block& b = bd.blocks[i];
    const auto& cuts = bd.block_cutvertices[i];
    TraceStep step;
    step.rule = RuleTag::EndblockRule;
    if (kind == BlockKind::K4Endblock) {
      step.paths.push_back(canonical_path(b.vertices));
      step.cover.push_back(cuts.empty() ? b.vertices.front() : cuts.front());
    } else {
      auto tp = *match_tp(b);
      step.paths.push_back(canonical_path({tp.fan[0], tp.x, tp.fan[1], tp.y}));
      step.cover.push_back(cuts.empty() ? std::min(tp.x, tp.y) : cuts.front());
    }
    step.removed_vertices = b.vertices;
    step.delta = 1;
    r.record(std::move(step));
    return true;
  }
  return false;
}

// T(p) blocks. Every 4-path meeting the part removed here passes through the
// single cover vertex, except for the triangle with one cutvertex, which loses
// an edge and gets its cover repaired at the end.
bool tp_rule(detail::Reduction& r, const RecognitionReport& report, const BlockDecomposition& bd) {
  const Graph& g = r.work();
  for (std::size_t i = 0; i < report.blocks.size(); ++i) {
    if (report.blocks[i].kind != BlockKind::TpBlock) continue;
    const Block& b = bd.blocks[i];
    const TpBlock& tp = *report.blocks[i].tp;
    const auto& cuts = bd.block_cutvertices[i];
    TraceStep step;
    step.rule = RuleTag::EndblockRule;
    step.delta = 1;
    step.removed_vertices = b.vertices;

    if (cuts.empty()) {
      if (tp.p < 2) continue;
      step.paths.push_back(canonical_path({tp.fan[0], tp.x, tp.y, tp.fan[1]}));
      step.cover.push_back(tp.x);
    } else if (cuts.size() == 1 && tp.p >= 2) {
      const Vertex c = cuts[0], o = c == tp.x ? tp.y : tp.x;
      step.paths.push_back(canonical_path({tp.fan[0], o, tp.fan[1], c}));
      step.cover.push_back(c);
    } else if (cuts.size() == 1) {
      const Vertex c = cuts[0];
      std::vector<Vertex> rest;
      for (Vertex v : b.vertices) {
        if (v != c) rest.push_back(v);
      }
      TraceStep cut;
      cut.rule = RuleTag::EdgeDeletionRule;
      cut.removed_edges.push_back({std::min(c, rest[0]), std::max(c, rest[0])});
      r.record(std::move(cut));
      const Vertex a = rest[0], bb = rest[1];
      r.defer([c, a, bb](const std::vector<bool>& in_cover) {
        std::map<Vertex, Vertex> swap;
        if (in_cover[c]) return swap;
        if (in_cover[a]) swap[a] = c;
        if (in_cover[bb]) swap[bb] = c;
        return swap;
      });
      return true;
    } else {
      // Two cutvertices: one of them, x, only sees leaves outside B. B plus
      // those leaves hangs at the other one.
      Vertex x = -1;
      for (Vertex c : cuts) {
        bool leaves = true;
        for (Vertex w : g.neighbors(c)) {
          if (!contains(b.vertices, w) && g.degree(w) != 1) leaves = false;
        }
        if (leaves) {
          x = c;
          break;
        }
      }
      if (x < 0) throw Error("internal: T(p) block without a leaf-only cutvertex");
      const Vertex y = x == cuts[0] ? cuts[1] : cuts[0];
      Vertex z = -1, leaf = -1;
      for (Vertex v : b.vertices) {
        if (z < 0 && v != x && v != y && g.adjacent(v, x) && g.adjacent(v, y)) z = v;
      }
      for (Vertex w : g.neighbors(x)) {
        if (!contains(b.vertices, w)) {
          if (leaf < 0) leaf = w;
          step.removed_vertices.push_back(w);
        }
      }
      std::sort(step.removed_vertices.begin(), step.removed_vertices.end());
      step.paths.push_back(canonical_path({leaf, x, z, y}));
      step.cover.push_back(y);
    }
    r.record(std::move(step));
    return true;
  }
  return false;
}

struct Branch {
  Vertex x = 0;
  std::vector<Vertex> vertices;  // sorted, includes x
  bool tree = true;
};

// The component of g - (V(B) - x) that contains x.
Branch branch_at(const Graph& g, const Block& b, Vertex x) {
  Branch br;
  br.x = x;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : b.vertices) seen[v] = true;
  std::vector<Vertex> stack{x};
  int edges = 0;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    br.vertices.push_back(u);
    for (Vertex w : g.neighbors(u)) {
      if (w == x || !contains(b.vertices, w)) ++edges;
      if (seen[w]) continue;
      seen[w] = true;
      stack.push_back(w);
    }
  }
  std::sort(br.vertices.begin(), br.vertices.end());
  br.tree = edges / 2 == static_cast<int>(br.vertices.size()) - 1;
  return br;
}

void leaf_block_rule(detail::Reduction& r, const RecognitionReport& report, const BlockDecomposition& bd) {
  const Graph& g = r.work();
  std::size_t chosen = report.blocks.size();
  std::vector<Branch> branches;
  int star = -1;  // index into branches of the branch at x*
  for (std::size_t i = 0; i < report.blocks.size() && chosen == report.blocks.size(); ++i) {
    if (report.blocks[i].kind != BlockKind::Subdivision) continue;
    branches.clear();
    star = -1;
    int non_trees = 0;
    for (Vertex x : bd.block_cutvertices[i]) {
      branches.push_back(branch_at(g, bd.blocks[i], x));
      if (!branches.back().tree) {
        ++non_trees;
        star = static_cast<int>(branches.size()) - 1;
      }
    }
    if (non_trees > 1) continue;
    if (star < 0 && !branches.empty()) star = 0;
    chosen = i;
  }
  if (chosen == report.blocks.size()) throw Error("internal: no block qualifies for the leaf-block rule");
  const Block& b = bd.blocks[chosen];
  const SubdivisionBlock& sb = *report.blocks[chosen].subdivision;

  // H' = H plus a pendant edge x-l (subdivided by w) for every x in X'.
  detail::HostedMultigraph s{sb.h, sb.anchor_of, sb.interiors};
  const int base = sb.h.order();
  for (std::size_t j = 0; j < branches.size(); ++j) {
    if (static_cast<int>(j) == star) continue;
    const Branch& br = branches[j];
    Vertex w = -1, l = -1;
    for (Vertex cand : g.neighbors(br.x)) {
      if (contains(b.vertices, cand)) continue;
      for (Vertex far : g.neighbors(cand)) {
        if (far != br.x) {
          w = cand;
          l = far;
          break;
        }
      }
      if (w >= 0) break;
    }
    if (w < 0) continue;
    int idx = s.h.add_vertex();
    s.host.push_back(l);
    s.h.add_edge(sb.h_index(br.x), idx);
    s.interiors.push_back({w});
  }
  auto side = bipartition(s.h);
  if (!side) throw Error("internal: H' is not bipartite");

  std::vector<Vertex> removed = b.vertices;
  for (std::size_t j = 0; j < branches.size(); ++j) {
    if (static_cast<int>(j) != star) removed.insert(removed.end(), branches[j].vertices.begin(), branches[j].vertices.end());
  }

  auto to_host = [&](const std::vector<Vertex>& cover) {
    std::vector<Vertex> out;
    for (Vertex v : cover) {
      // A pendant of H' is replaced by its attachment vertex.
      Vertex u = v;
      if (v >= base) {
        for (const auto& e : s.h.edges()) {
          if (e.v == v) u = e.u;
        }
      }
      out.push_back(s.host[u]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };

  TraceStep step;
  step.rule = RuleTag::LeafBlockRule;
  std::vector<int> matching;
  Vertex keep_pendant = -1;
  if (star < 0) {
    auto cert = bipartite_matching(s.h, *side);
    matching = cert.edges;
    step.cover = to_host(cert.cover);
    auto f = detail::contracted_assignment(s.h, matching);
    for (std::size_t j = 0; j < matching.size(); ++j) step.paths.push_back(detail::matched_edge_path(s, matching[j], f.f_matched[j]));
  } else {
    const Vertex x_star = branches[star].x;
    const int xs = sb.h_index(x_star);
    Multigraph without(s.h.order());
    std::vector<int> origin;
    for (int e = 0; e < s.h.size(); ++e) {
      if (s.h.edges()[e].u == xs || s.h.edges()[e].v == xs) continue;
      without.add_edge(s.h.edges()[e].u, s.h.edges()[e].v);
      origin.push_back(e);
    }
    auto full = bipartite_matching(s.h, *side);
    auto rest = bipartite_matching(without, *side);
    if (full.cover.size() == rest.cover.size() + 1) {
      // x* lies in a minimum cover of H'.
      matching = full.edges;
      std::vector<Vertex> cover = rest.cover;
      cover.push_back(xs);
      step.cover = to_host(cover);
      auto f = detail::contracted_assignment(s.h, matching);
      for (std::size_t j = 0; j < matching.size(); ++j) step.paths.push_back(detail::matched_edge_path(s, matching[j], f.f_matched[j]));
      std::vector<Vertex> hanging;
      for (Vertex v : branches[star].vertices) {
        if (v != x_star) hanging.push_back(v);
      }
      removed.erase(std::remove_if(removed.begin(), removed.end(), [&](Vertex v) { return contains(hanging, v); }),
                    removed.end());
    } else {
      // No minimum cover of H' uses x*: match around it and keep G_{x*} plus
      // the middle vertex of f(x*) as a pendant at x*.
      for (int e : rest.edges) matching.push_back(origin[e]);
      step.cover = to_host(full.cover);
      auto f = detail::contracted_assignment(s.h, matching);
      for (std::size_t j = 0; j < matching.size(); ++j) step.paths.push_back(detail::matched_edge_path(s, matching[j], f.f_matched[j]));
      const int fx = f.f_node[f.node_of[xs]];
      keep_pendant = s.interiors[fx].front();
      removed.erase(std::remove_if(removed.begin(), removed.end(),
                                   [&](Vertex v) { return v == keep_pendant || contains(branches[star].vertices, v); }),
                    removed.end());
      r.defer([keep_pendant, x_star](const std::vector<bool>& in_cover) {
        std::map<Vertex, Vertex> swap;
        if (in_cover[keep_pendant]) swap[keep_pendant] = x_star;
        return swap;
      });
    }
  }
  std::sort(removed.begin(), removed.end());
  removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
  step.removed_vertices = std::move(removed);
  step.delta = static_cast<int>(matching.size());
  r.record(std::move(step));
}

}  // namespace

SolveResult solve_h4(const Graph& g) {
  if (!recognize_h4(g).member) throw InvalidInput("graph is not a member of the recognised class for k = 4");
  detail::Reduction r(g, 4);
  while (has_kpath(r.work(), 4)) {
    auto report = recognize_h4(r.work());
    if (!report.member) throw Error("internal: reduction left the recognised class");
    auto bd = block_decomposition(r.work());
    if (endblock_rule(r, report, bd) || tp_rule(r, report, bd)) continue;
    if (auto step = detail::find_tree_step(r.work(), 4, r.alive())) {
      r.apply_tree_step(std::move(*step));
      continue;
    }
    leaf_block_rule(r, report, bd);
  }
  return r.finish("structured:h4");
}

}  // namespace kpath
