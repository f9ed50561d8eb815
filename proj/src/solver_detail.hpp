#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kpath/solver.hpp"

namespace kpath::detail {

// A tree hanging at x (or a whole tree component) holding a k-path that
// avoids nothing but x: delete `removed`, cover x, keep `path`.
struct TreeStep {
  Vertex x = 0;
  std::vector<Vertex> removed;
  KPath path;
};

// Vertices with alive[v] false are ignored.
std::optional<TreeStep> find_tree_step(const Graph& work, int k, const std::vector<bool>& alive);

// M contracted to single nodes, then matching_edge_assignment on the result.
struct ContractedAssignment {
  std::vector<int> node_of;   // per vertex of h
  std::vector<int> f_node;    // per node, an edge index of h outside M
  std::vector<int> f_matched; // per entry of the matching list
};

ContractedAssignment contracted_assignment(const Multigraph& h, const std::vector<int>& matching);

// h drawn inside a host graph: vertex i is host[i], edge e has the listed
// interior vertices from edge.u to edge.v.
struct HostedMultigraph {
  Multigraph h;
  std::vector<Vertex> host;
  std::vector<std::vector<Vertex>> interiors;
};

// For e in M and its partner f(e): subdivided e ending at the shared vertex,
// then the interior of f(e).
KPath matched_edge_path(const HostedMultigraph& s, int e, int f);

// Working copy of the graph plus the certificates collected so far.
class Reduction {
 public:
  Reduction(const Graph& g, int k);

  const Graph& work() const noexcept { return work_; }
  const Graph& original() const noexcept { return g_; }
  const std::vector<bool>& alive() const noexcept { return alive_; }
  int k() const noexcept { return k_; }

  // Deletes the step's vertices (their edges) and edges, keeps its certificates.
  void record(TraceStep step);
  void apply_tree_step(TreeStep step);
  // Called on the final cover, latest first; returns substitutions old -> new.
  void defer(std::function<std::map<Vertex, Vertex>(const std::vector<bool>&)> fixup);

  SolveResult finish(std::string method);

 private:
  Graph g_;
  int k_;
  Graph work_;
  std::vector<bool> alive_;
  ReductionTrace trace_;
  std::vector<std::function<std::map<Vertex, Vertex>(const std::vector<bool>&)>> fixups_;
};

}  // namespace kpath::detail
