#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kpath/graph.hpp"
#include "kpath/oracle.hpp"
#include "kpath/paths.hpp"
#include "kpath/recognition.hpp"

namespace kpath {

enum class RuleTag { TreeRule, SubdivisionRule, EndblockRule, EdgeDeletionRule, LeafBlockRule };

const char* rule_name(RuleTag tag);

struct TraceStep {
  RuleTag rule = RuleTag::TreeRule;
  std::vector<Vertex> removed_vertices;
  std::vector<Edge> removed_edges;
  std::vector<KPath> paths;
  std::vector<Vertex> cover;
  int delta = 0;
};

struct ReductionTrace {
  std::vector<TraceStep> steps;

  int total() const;
};

struct SolveResult {
  int nu = 0;
  int tau = 0;
  KMatching matching;
  KVertexCover cover;
  ReductionTrace trace;
  std::string method;
};

/// Maximum matching and minimum vertex cover of a bipartite (multi)graph.
/// `edges` holds indices into the input edge list.
struct BipartiteCertificate {
  std::vector<int> edges;
  std::vector<Edge> matching;
  std::vector<Vertex> cover;  // sorted
};

/// Augmenting paths from side-0 vertices; the cover comes from alternating
/// reachability. Throws InvalidInput on loops or an improper bipartition.
BipartiteCertificate bipartite_matching(const Multigraph& h, const std::vector<int>& side);
BipartiteCertificate bipartite_matching(const Graph& g, const std::vector<int>& side);

/// Injective f: V(h) -> E(h) (edge indices) with u incident to f(u), for a
/// connected multigraph with a cycle: the least non-bridge edge goes to its
/// smaller endpoint r, every other vertex gets its parent edge in a BFS tree
/// of h - e rooted at r.
std::vector<int> matching_edge_assignment(const Multigraph& h);

/// Repeatedly covers the deepest vertex whose subtree holds a k-path.
SolveResult solve_forest(const Graph& g, int k);

/// Removes subdivision blocks through the edge assignment, then finishes with
/// the tree rule. Accepts members of H'_k for odd k >= 5 and of H3 for k = 3.
SolveResult solve_hk_prime(const Graph& g, int k);

/// Induction over the blocks of a member of H4.
SolveResult solve_h4(const Graph& g);

/// Disjoint k-paths in Sub_{k/2}(h) from a maximum matching of h and
/// a cover from a minimum vertex cover of h. Vertex ids follow subdivide().
std::pair<KMatching, KVertexCover> bip_half_subdivision_certificates(const Multigraph& h, int k);

/// Picks the strongest applicable method; see the README for the order.
SolveResult solve(const Graph& g, int k, const OracleBudget& budget = OracleBudget::from_env());

/// Certificate text: "matching:", one path per line, "cover:", one line of
/// ids, then "value: v" (or "value: nu=a tau=b" when they differ).
std::string format_certificate(const SolveResult& result);

struct ParsedCertificate {
  KMatching matching;
  KVertexCover cover;
  std::optional<int> value;
};
ParsedCertificate parse_certificate(const std::string& text);

}  // namespace kpath
