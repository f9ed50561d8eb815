#include "kpath/recognition.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>
#include <variant>

#include "kpath/error.hpp"
#include "kpath/paths.hpp"

namespace kpath {

std::vector<Edge> SubdivisionBlock::host_edges() const {
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < h.edges().size(); ++e) {
    Vertex prev = anchor_of[h.edges()[e].u];
    for (Vertex w : interiors[e]) {
      edges.push_back({std::min(prev, w), std::max(prev, w)});
      prev = w;
    }
    Vertex last = anchor_of[h.edges()[e].v];
    edges.push_back({std::min(prev, last), std::max(prev, last)});
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

int SubdivisionBlock::h_index(Vertex v) const {
  auto it = std::lower_bound(anchor_of.begin(), anchor_of.end(), v);
  return (it != anchor_of.end() && *it == v) ? static_cast<int>(it - anchor_of.begin()) : -1;
}

namespace {

std::string join(const std::vector<Vertex>& vs, char sep = ' ') {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(vs[i]);
  }
  return out;
}

}  // namespace

std::string BlockReport::classification() const {
  switch (kind) {
    case BlockKind::Trivial:
      return "trivial";
    case BlockKind::Subdivision: {
      const auto& s = *subdivision;
      std::string out = "sub" + std::to_string(s.k) + " H-vertices " + join(s.anchor_of) + " H-edges";
      for (const auto& e : s.h.edges()) out += " " + std::to_string(s.anchor_of[e.u]) + "-" + std::to_string(s.anchor_of[e.v]);
      return out;
    }
    case BlockKind::K4Endblock:
      return "K4-endblock " + join(vertices);
    case BlockKind::T2Endblock:
      return "T(2)-endblock " + join(vertices);
    case BlockKind::TpBlock:
      return "T(" + std::to_string(tp->p) + ") apex " + std::to_string(tp->x) + "-" + std::to_string(tp->y) + " fan " +
             join(tp->fan);
    case BlockKind::Violation:
      return "violation: " + detail;
  }
  return "unknown";
}

std::string RecognitionReport::text() const {
  std::ostringstream out;
  for (const auto& b : blocks) out << "block " << b.id << ": " << b.classification() << '\n';
  out << "verdict: " << (member ? "member" : "non-member") << '\n';
  if (!girth_ok) out << "precondition: girth " << *girth << " is below k\n";
  if (!witness.empty()) out << "witness: " << witness << '\n';
  return out.str();
}

namespace {

// Writes the block as Sub_k(H) with H-vertices at the anchors and every k
// steps along each thread, or explains why the thread lengths forbid it.
std::variant<SubdivisionBlock, std::string> split_threads(const Graph& g, const Block& block,
                                                          const std::vector<Vertex>& anchors, int k) {
  auto sub = induced_subgraph(g, block.vertices);
  std::vector<Vertex> local;
  for (Vertex a : anchors) {
    local.push_back(static_cast<Vertex>(std::lower_bound(block.vertices.begin(), block.vertices.end(), a) -
                                        block.vertices.begin()));
  }
  ThreadContraction tc = contract_threads(sub.graph, local);

  struct Piece {
    Vertex a, b;
    std::vector<Vertex> interior;
  };
  std::vector<Vertex> h_vertices(anchors.begin(), anchors.end());
  std::vector<Piece> pieces;
  for (const auto& t : tc.threads) {
    std::vector<Vertex> seq{sub.original[t.from]};
    for (Vertex v : t.interior) seq.push_back(sub.original[v]);
    seq.push_back(sub.original[t.to]);
    const int len = t.length();
    if (len % k != 0) {
      return "thread " + join(seq, '-') + " has length " + std::to_string(len) + ", not a multiple of " +
             std::to_string(k);
    }
    for (int pos = k; pos < len; pos += k) h_vertices.push_back(seq[pos]);
    for (int pos = 0; pos < len; pos += k) {
      Piece piece{seq[pos], seq[pos + k], {seq.begin() + pos + 1, seq.begin() + pos + k}};
      pieces.push_back(std::move(piece));
    }
  }
  std::sort(h_vertices.begin(), h_vertices.end());

  SubdivisionBlock result;
  result.k = k;
  result.anchor_of = h_vertices;
  result.h = Multigraph(static_cast<int>(h_vertices.size()));
  for (auto& piece : pieces) {
    int u = result.h_index(piece.a), v = result.h_index(piece.b);
    if (u > v || (u == v && !piece.interior.empty() && piece.interior.front() > piece.interior.back())) {
      std::swap(u, v);
      std::reverse(piece.interior.begin(), piece.interior.end());
    }
    piece.a = u;
    piece.b = v;
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& x, const Piece& y) {
    return std::tie(x.a, x.b, x.interior) < std::tie(y.a, y.b, y.interior);
  });
  for (auto& piece : pieces) {
    result.h.add_edge(piece.a, piece.b);
    result.interiors.push_back(std::move(piece.interior));
  }
  return result;
}

std::vector<Vertex> forced_anchors(const Graph& g, const Block& block) {
  std::vector<Vertex> anchors;
  for (Vertex v : block.vertices) {
    if (g.degree(v) >= 3) anchors.push_back(v);
  }
  if (anchors.empty()) anchors.push_back(block.vertices.front());
  return anchors;
}

int block_degree(const Block& block, Vertex v) {
  int d = 0;
  for (const auto& e : block.edges) d += (e.u == v) + (e.v == v);
  return d;
}

bool is_k4(const Block& b) { return b.vertices.size() == 4 && b.edges.size() == 6; }
bool is_t2(const Block& b) { return b.vertices.size() == 4 && b.edges.size() == 5; }

// Components of g - hv meeting the block outside hv must be trees without a k-path.
std::optional<std::string> hanging_components_defect(const Graph& g, const Block& block,
                                                     const std::vector<Vertex>& hv, int k) {
  std::vector<char> state(static_cast<std::size_t>(g.order()), 0);  // 1 removed, 2 visited
  for (Vertex v : hv) state[v] = 1;
  for (Vertex start : block.vertices) {
    if (state[start] != 0) continue;
    std::vector<Vertex> comp{start};
    state[start] = 2;
    long long degree_sum = 0;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (state[w] == 1) continue;
        ++degree_sum;
        if (state[w] == 0) {
          state[w] = 2;
          comp.push_back(w);
        }
      }
    }
    if (degree_sum / 2 != static_cast<long long>(comp.size()) - 1) {
      return "component of G-V(H) at vertex " + std::to_string(start) + " contains a cycle";
    }
    auto forest = induced_subgraph(g, comp);
    if (forest_longest_path(forest.graph) >= k) {
      return "component of G-V(H) at vertex " + std::to_string(start) + " contains a " + std::to_string(k) + "-path";
    }
  }
  return std::nullopt;
}

// Vertices of a cycle block starting at its least vertex, heading to the
// smaller of its two neighbours.
std::vector<Vertex> cycle_order(const Block& block) {
  std::vector<std::vector<Vertex>> nbrs;
  auto index = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(block.vertices.begin(), block.vertices.end(), v) -
                                    block.vertices.begin());
  };
  nbrs.resize(block.vertices.size());
  for (const auto& e : block.edges) {
    nbrs[index(e.u)].push_back(e.v);
    nbrs[index(e.v)].push_back(e.u);
  }
  std::vector<Vertex> order{block.vertices.front()};
  Vertex cur = block.vertices.front();
  Vertex next = std::min(nbrs[0][0], nbrs[0][1]);
  while (next != block.vertices.front()) {
    order.push_back(next);
    const auto& nn = nbrs[index(next)];
    Vertex after = nn[0] == cur ? nn[1] : nn[0];
    cur = next;
    next = after;
  }
  return order;
}

void finish(RecognitionReport& report) {
  for (const auto& b : report.blocks) {
    if (b.kind == BlockKind::Violation) {
      report.member = false;
      if (report.witness.empty()) report.witness = "block " + std::to_string(b.id) + ": " + b.detail;
    }
  }
}

BlockReport trivial_report(int id, const Block& block) {
  BlockReport r;
  r.id = id;
  r.vertices = block.vertices;
  r.kind = BlockKind::Trivial;
  return r;
}

}  // namespace

std::optional<TpBlock> match_tp(const Block& block) {
  const int nb = static_cast<int>(block.vertices.size());
  const int p = nb - 2;
  if (p < 1 || static_cast<int>(block.edges.size()) != 2 * p + 1) return std::nullopt;
  std::vector<Vertex> apex;
  for (Vertex v : block.vertices) {
    if (block_degree(block, v) == p + 1) apex.push_back(v);
  }
  if (apex.size() < 2) return std::nullopt;
  const Vertex x = apex[0], y = apex[1];
  auto has_edge = [&](Vertex a, Vertex b) {
    return std::binary_search(block.edges.begin(), block.edges.end(), Edge{std::min(a, b), std::max(a, b)});
  };
  if (!has_edge(x, y)) return std::nullopt;
  TpBlock tp{p, x, y, {}};
  for (Vertex v : block.vertices) {
    if (v == x || v == y) continue;
    if (!has_edge(v, x) || !has_edge(v, y)) return std::nullopt;
    tp.fan.push_back(v);
  }
  return tp;
}

RecognitionReport recognize_h3(const Graph& g) {
  RecognitionReport report;
  auto bd = block_decomposition(g);
  for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
    const Block& block = bd.blocks[i];
    BlockReport r = trivial_report(static_cast<int>(i), block);
    if (!block.trivial()) {
      auto split = split_threads(g, block, forced_anchors(g, block), 3);
      if (auto* s = std::get_if<SubdivisionBlock>(&split)) {
        r.kind = BlockKind::Subdivision;
        r.subdivision = std::move(*s);
      } else {
        r.kind = BlockKind::Violation;
        r.detail = std::get<std::string>(split);
      }
    }
    report.blocks.push_back(std::move(r));
  }
  finish(report);
  return report;
}

RecognitionReport recognize_h4(const Graph& g) {
  RecognitionReport report;
  auto bd = block_decomposition(g);
  for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
    const Block& block = bd.blocks[i];
    BlockReport r = trivial_report(static_cast<int>(i), block);
    report.blocks.push_back(r);
    if (block.trivial()) continue;
    BlockReport& out = report.blocks.back();
    const auto& cuts = bd.block_cutvertices[i];

    // (i) Sub_2 of a loopless bipartite multigraph, cutvertices on H.
    auto split = split_threads(g, block, forced_anchors(g, block), 2);
    std::string reason;
    if (auto* s = std::get_if<SubdivisionBlock>(&split)) {
      bool loops = std::any_of(s->h.edges().begin(), s->h.edges().end(), [](const Edge& e) { return e.u == e.v; });
      if (!loops && bipartition(s->h)) {
        out.kind = BlockKind::Subdivision;
        out.subdivision = std::move(*s);
        continue;
      }
      reason = loops ? "recovered H has a loop" : "recovered H is not bipartite";
    } else {
      reason = std::get<std::string>(split);
    }
    // (ii) K4 endblock.
    if (is_k4(block)) {
      if (cuts.size() <= 1) {
        out.kind = BlockKind::K4Endblock;
        continue;
      }
      out.kind = BlockKind::Violation;
      out.detail = "K4 block with " + std::to_string(cuts.size()) + " cutvertices";
      continue;
    }
    // (iii) T(2) endblock whose cutvertex has degree 2 in B.
    if (is_t2(block) && cuts.size() <= 1 && (cuts.empty() || block_degree(block, cuts[0]) == 2)) {
      out.kind = BlockKind::T2Endblock;
      continue;
    }
    // (iv) T(p) with at most two cutvertices of degree p+1 in B.
    if (auto tp = match_tp(block)) {
      bool ok = cuts.size() <= 2;
      for (Vertex c : cuts) ok = ok && block_degree(block, c) == tp->p + 1;
      if (ok && cuts.size() == 2) {
        ok = false;
        for (Vertex x : cuts) {
          bool leaves = true;
          for (Vertex w : g.neighbors(x)) {
            if (!std::binary_search(block.vertices.begin(), block.vertices.end(), w) && g.degree(w) != 1) leaves = false;
          }
          ok = ok || leaves;
        }
      }
      if (ok) {
        out.kind = BlockKind::TpBlock;
        out.tp = std::move(*tp);
        continue;
      }
      out.kind = BlockKind::Violation;
      out.detail = "T(" + std::to_string(tp->p) + ") block with cutvertices " + join(cuts) +
                   " violates the attachment conditions";
      continue;
    }
    out.kind = BlockKind::Violation;
    out.detail = reason;
  }
  finish(report);
  return report;
}

RecognitionReport recognize_hk_prime(const Graph& g, int k) {
  if (k < 3 || k % 2 == 0) throw InvalidInput("the odd-k recognizer needs an odd k >= 3");
  RecognitionReport report;
  report.girth = girth(g);
  report.girth_ok = !report.girth || *report.girth >= k;
  auto bd = block_decomposition(g);
  for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
    const Block& block = bd.blocks[i];
    BlockReport r = trivial_report(static_cast<int>(i), block);
    if (block.trivial()) {
      report.blocks.push_back(std::move(r));
      continue;
    }
    std::vector<Vertex> branch;
    for (Vertex v : block.vertices) {
      if (block_degree(block, v) >= 3) branch.push_back(v);
    }
    std::vector<std::vector<Vertex>> placements;
    if (!branch.empty()) {
      placements.push_back(branch);
    } else if (block.vertices.size() % static_cast<std::size_t>(k) != 0) {
      r.kind = BlockKind::Violation;
      r.detail = "cycle block of order " + std::to_string(block.vertices.size()) + " is not a multiple of " +
                 std::to_string(k);
    } else {
      auto order = cycle_order(block);
      for (int s = 0; s < k; ++s) placements.push_back({order[static_cast<std::size_t>(s)]});
    }
    std::string last_defect;
    for (const auto& anchors : placements) {
      auto split = split_threads(g, block, anchors, k);
      if (auto* s = std::get_if<std::string>(&split)) {
        last_defect = *s;
        continue;
      }
      auto& sb = std::get<SubdivisionBlock>(split);
      if (auto defect = hanging_components_defect(g, block, sb.anchor_of, k)) {
        last_defect = *defect;
        continue;
      }
      r.kind = BlockKind::Subdivision;
      r.subdivision = std::move(sb);
      break;
    }
    if (r.kind == BlockKind::Trivial) {
      r.kind = BlockKind::Violation;
      if (r.detail.empty()) {
        r.detail = placements.size() > 1 ? "no placement of H-vertices on the cycle works; last: " + last_defect
                                         : last_defect;
      }
    }
    report.blocks.push_back(std::move(r));
  }
  finish(report);
  return report;
}

std::optional<RecognitionReport> recognize(const Graph& g, int k) {
  if (k == 3) return recognize_h3(g);
  if (k == 4) return recognize_h4(g);
  if (k >= 5 && k % 2 == 1) return recognize_hk_prime(g, k);
  return std::nullopt;
}

FilterResult cycle_filters(const Graph& g, int k, int max_block_vertices) {
  if (k < 1) throw InvalidInput("k must be positive");
  FilterResult result;
  auto bd = block_decomposition(g);
  const std::size_t cycle_budget = 1'000'000;
  for (const auto& block : bd.blocks) {
    if (block.trivial()) continue;
    if (static_cast<int>(block.vertices.size()) > max_block_vertices) {
      result.status = FilterStatus::Inconclusive;
      continue;
    }
    auto in_block = [&](Vertex v) { return std::binary_search(block.vertices.begin(), block.vertices.end(), v); };
    std::vector<Vertex> path;
    std::vector<bool> on_path(static_cast<std::size_t>(g.order()), false);
    std::size_t seen = 0;
    std::string failure;
    bool exhausted = false;

    auto check_cycle = [&](const std::vector<Vertex>& c) {
      const int len = static_cast<int>(c.size());
      if (len >= k && len % k != 0) {
        failure = "cycle " + join(c) + " of order " + std::to_string(len);
        return;
      }
      const int modulus = k == 3 ? 3 : (k == 4 && len >= 4 ? 2 : 0);
      if (modulus == 0) return;
      std::vector<bool> on_c(static_cast<std::size_t>(g.order()), false);
      for (Vertex v : c) on_c[v] = true;
      std::vector<int> attached;
      for (int i = 0; i < len; ++i) {
        for (Vertex w : g.neighbors(c[i])) {
          if (!on_c[w]) {
            attached.push_back(i);
            break;
          }
        }
      }
      for (std::size_t a = 0; a < attached.size(); ++a) {
        for (std::size_t b = a + 1; b < attached.size(); ++b) {
          int d = attached[b] - attached[a];
          d = std::min(d, len - d);
          if (d % modulus != 0) {
            failure = "vertices " + std::to_string(c[attached[a]]) + " and " + std::to_string(c[attached[b]]) +
                      " of cycle " + join(c) + " have outside neighbours at distance " + std::to_string(d);
            return;
          }
        }
      }
    };

    std::function<void(Vertex, Vertex)> dfs = [&](Vertex start, Vertex v) {
      for (Vertex w : g.neighbors(v)) {
        if (!failure.empty() || exhausted) return;
        if (w == start && path.size() >= 3 && path[1] < path.back()) {
          if (++seen > cycle_budget) {
            exhausted = true;
            return;
          }
          check_cycle(path);
          continue;
        }
        if (w <= start || on_path[w] || !in_block(w)) continue;
        on_path[w] = true;
        path.push_back(w);
        dfs(start, w);
        path.pop_back();
        on_path[w] = false;
      }
    };
    for (Vertex s : block.vertices) {
      path.assign(1, s);
      on_path[s] = true;
      dfs(s, s);
      on_path[s] = false;
      if (!failure.empty()) {
        result.status = FilterStatus::Fail;
        result.witness = failure;
        return result;
      }
    }
    if (exhausted) result.status = FilterStatus::Inconclusive;
  }
  return result;
}

}  // namespace kpath
