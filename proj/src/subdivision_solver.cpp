#include <algorithm>

#include "kpath/error.hpp"
#include "solver_detail.hpp"

namespace kpath {

namespace {

RecognitionReport recognize_odd(const Graph& g, int k) { return k == 3 ? recognize_h3(g) : recognize_hk_prime(g, k); }

}  // namespace

SolveResult solve_hk_prime(const Graph& g, int k) {
  if (k < 3 || k % 2 == 0) throw InvalidInput("the subdivision solver needs an odd k >= 3");
  if (!recognize_odd(g, k).member) throw InvalidInput("graph is not a member of the recognised class for k = " + std::to_string(k));

  detail::Reduction r(g, k);
  for (;;) {
    auto report = recognize_odd(r.work(), k);
    if (!report.member) throw Error("internal: reduction left the recognised class");
    auto block = std::find_if(report.blocks.begin(), report.blocks.end(),
                              [](const BlockReport& b) { return b.kind == BlockKind::Subdivision; });
    if (block == report.blocks.end()) break;
    const SubdivisionBlock& sb = *block->subdivision;

    TraceStep step;
    step.rule = RuleTag::SubdivisionRule;
    auto f = matching_edge_assignment(sb.h);
    for (Vertex u = 0; u < sb.h.order(); ++u) {
      const Edge e = sb.h.edges()[f[u]];
      std::vector<Vertex> seq{sb.anchor_of[u]};
      std::vector<Vertex> inner = sb.interiors[f[u]];
      if (e.u != u) std::reverse(inner.begin(), inner.end());
      seq.insert(seq.end(), inner.begin(), inner.end());
      step.paths.push_back(canonical_path(std::move(seq)));
    }
    step.removed_vertices = sb.anchor_of;
    step.cover = sb.anchor_of;
    step.delta = sb.h.order();
    r.record(std::move(step));
  }
  while (auto step = detail::find_tree_step(r.work(), k, r.alive())) r.apply_tree_step(std::move(*step));
  return r.finish(k == 3 ? "structured:h3" : "structured:hk_prime");
}

}  // namespace kpath
