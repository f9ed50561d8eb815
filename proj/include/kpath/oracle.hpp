#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "kpath/graph.hpp"
#include "kpath/paths.hpp"

namespace kpath {

/// Limits for the exact exponential computations. Exceeding one raises
/// ResourceExceeded instead of returning a guess.
struct OracleBudget {
  int max_vertices = 28;
  std::size_t max_paths = 2'000'000;
  std::size_t max_states = 2'000'000;
  /// Largest component handled by the full subset table of in_Gk.
  int max_table_vertices = 22;

  /// Defaults, with max_states taken from $KPATH_BUDGET when it is set.
  static OracleBudget from_env();
};

/// Exact ν_k / τ_k on vertex subsets of one graph, memoised on subset bitmasks.
///
/// Paths are handled through their vertex sets: two k-paths on the same set
/// are interchangeable for both packing and covering.
class PathOracle {
 public:
  using Mask = std::uint32_t;

  PathOracle(const Graph& g, int k, OracleBudget budget = OracleBudget::from_env());

  const Graph& graph() const noexcept { return g_; }
  int k() const noexcept { return k_; }
  Mask all() const noexcept { return all_; }
  const std::vector<KPath>& paths() const noexcept { return paths_; }
  /// Distinct vertex sets of k-paths, ascending.
  const std::vector<Mask>& path_sets() const noexcept { return sets_; }

  int nu(Mask s);
  int tau(Mask s);
  int nu() { return nu(all_); }
  int tau() { return tau(all_); }

  /// Lexicographically least maximum k-matching inside s.
  KMatching max_matching(Mask s);
  /// Lexicographically least minimum k-vertex cover of g[s].
  KVertexCover min_cover(Mask s);
  std::vector<KVertexCover> all_min_covers(Mask s);

  static Mask bit(Vertex v) { return Mask{1} << v; }

 private:
  // Union of the path sets inside s; vertices outside it are irrelevant.
  Mask core(Mask s, Vertex* busiest) const;
  void charge();

  Graph g_;
  int k_;
  OracleBudget budget_;
  Mask all_ = 0;
  std::vector<KPath> paths_;
  std::vector<Mask> sets_;
  std::vector<std::vector<Mask>> sets_through_;  // per vertex
  std::unordered_map<Mask, int> nu_memo_, tau_memo_;
};

std::pair<int, KMatching> nu_k(const Graph& g, int k, OracleBudget budget = OracleBudget::from_env());
std::pair<int, KVertexCover> tau_k(const Graph& g, int k, OracleBudget budget = OracleBudget::from_env());
std::vector<KVertexCover> all_min_covers(const Graph& g, int k, OracleBudget budget = OracleBudget::from_env());

/// ν_k(H) = τ_k(H) for every induced subgraph H of g.
bool in_Gk(const Graph& g, int k, OracleBudget budget = OracleBudget::from_env());
/// ν_k(H) = τ_k(H) for every subgraph H of g, induced or not.
bool in_Gk_all_subgraphs(const Graph& g, int k, OracleBudget budget = OracleBudget::from_env());

}  // namespace kpath
