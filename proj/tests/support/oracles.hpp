#pragma once

// Test-only reference computations. None of them calls the library's path
// enumeration, oracle, LP or canonical code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "kpath/graph.hpp"

namespace oracle {

using kpath::Graph;
using Mask = std::uint32_t;

inline bool adjacent(const Graph& g, int u, int v) {
  for (int w : g.neighbors(u)) {
    if (w == v) return true;
  }
  return false;
}

// Vertex sets of k-paths, found by trying every ordering of every k-subset.
inline std::vector<Mask> path_sets(const Graph& g, int k) {
  const int n = g.order();
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    if (__builtin_popcount(s) != k) continue;
    std::vector<int> vs;
    for (int v = 0; v < n; ++v) {
      if (s >> v & 1) vs.push_back(v);
    }
    bool ok = false;
    do {
      bool path = true;
      for (int i = 0; i + 1 < k && path; ++i) path = adjacent(g, vs[i], vs[i + 1]);
      ok = path;
    } while (!ok && std::next_permutation(vs.begin(), vs.end()));
    if (ok) out.push_back(s);
  }
  return out;
}

// Number of k-paths counted as vertex sequences up to reversal.
inline long long path_count(const Graph& g, int k) {
  const int n = g.order();
  long long count = 0;
  std::vector<int> seq;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(seq.size()) == k) {
      if (k == 1 || seq.front() < seq.back()) ++count;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || (!seq.empty() && !adjacent(g, seq.back(), v))) continue;
      used[v] = true;
      seq.push_back(v);
      self(self);
      seq.pop_back();
      used[v] = false;
    }
  };
  rec(rec);
  return count;
}

inline int packing(const std::vector<Mask>& sets, std::size_t from, Mask used) {
  int best = 0;
  for (std::size_t i = from; i < sets.size(); ++i) {
    if (sets[i] & used) continue;
    best = std::max(best, 1 + packing(sets, i + 1, used | sets[i]));
  }
  return best;
}

inline int nu(const std::vector<Mask>& sets, Mask within) {
  std::vector<Mask> inside;
  for (Mask s : sets) {
    if ((s & within) == s) inside.push_back(s);
  }
  return packing(inside, 0, 0);
}

inline int tau(const std::vector<Mask>& sets, Mask within, int n) {
  std::vector<Mask> inside;
  for (Mask s : sets) {
    if ((s & within) == s) inside.push_back(s);
  }
  for (int size = 0; size <= n; ++size) {
    for (Mask c = 0; c < (Mask{1} << n); ++c) {
      if (__builtin_popcount(c) != size || (c & ~within)) continue;
      if (std::all_of(inside.begin(), inside.end(), [&](Mask s) { return (s & c) != 0; })) return size;
    }
  }
  return n;
}

inline int nu(const Graph& g, int k) { return nu(path_sets(g, k), (Mask{1} << g.order()) - 1); }
inline int tau(const Graph& g, int k) { return tau(path_sets(g, k), (Mask{1} << g.order()) - 1, g.order()); }

inline bool in_Gk(const Graph& g, int k) {
  auto sets = path_sets(g, k);
  for (Mask s = 0; s < (Mask{1} << g.order()); ++s) {
    if (oracle::nu(sets, s) != oracle::tau(sets, s, g.order())) return false;
  }
  return true;
}

// Every subgraph, induced or not: vertex subsets times edge subsets.
inline bool in_Gk_all_subgraphs(const Graph& g, int k) {
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  for (long long e = 0; e < (1LL << m); ++e) {
    std::vector<kpath::Edge> kept;
    for (int i = 0; i < m; ++i) {
      if (e >> i & 1) kept.push_back(edges[i]);
    }
    if (!oracle::in_Gk(Graph(g.order(), kept), k)) return false;
  }
  return true;
}

// Maximum matching size through Boost's Edmonds implementation.
inline int edmonds(const Graph& g) {
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BG bg(static_cast<std::size_t>(g.order()));
  for (const auto& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  std::vector<boost::graph_traits<BG>::vertex_descriptor> mate(static_cast<std::size_t>(g.order()));
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
  return static_cast<int>(boost::matching_size(bg, &mate[0]));
}

// Isomorphism-invariant key by trying every permutation.
inline std::string brute_key(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) s += adjacent(g, perm[i], perm[j]) ? '1' : '0';
    }
    if (best.empty() || s > best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

// Isomorphism classes of graphs of order n, by brute force over labelled graphs.
inline std::set<std::string> classes(int n, bool connected_only) {
  std::set<std::string> keys;
  const int pairs = n * (n - 1) / 2;
  for (long long bits = 0; bits < (1LL << pairs); ++bits) {
    std::vector<kpath::Edge> edges;
    int idx = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i, ++idx) {
        if (bits >> idx & 1) edges.push_back({i, j});
      }
    }
    Graph g(n, edges);
    if (connected_only && !kpath::is_connected(g)) continue;
    keys.insert(brute_key(g));
  }
  return keys;
}

// Integer determinant by cofactor expansion.
inline long long laplace(const std::vector<std::vector<long long>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  long long det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<std::vector<long long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) row.push_back(a[r][j]);
      }
      minor.push_back(row);
    }
    det += (c % 2 ? -1 : 1) * a[0][c] * laplace(minor);
  }
  return det;
}

}  // namespace oracle
