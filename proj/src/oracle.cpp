#include "kpath/oracle.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <set>

#include "kpath/error.hpp"

namespace kpath {

using Mask = PathOracle::Mask;

OracleBudget OracleBudget::from_env() {
  OracleBudget budget;
  if (const char* text = std::getenv("KPATH_BUDGET"); text != nullptr && *text != '\0') {
    std::size_t value = 0;
    const char* end = text + std::strlen(text);
    auto [ptr, ec] = std::from_chars(text, end, value);
    if (ec != std::errc() || ptr != end || value == 0) {
      throw InvalidInput(std::string("KPATH_BUDGET must be a positive integer, got '") + text + "'");
    }
    budget.max_states = value;
  }
  return budget;
}

namespace {

Mask mask_of(const KPath& p) {
  Mask m = 0;
  for (Vertex v : p.vertices) m |= PathOracle::bit(v);
  return m;
}

struct PathSets {
  std::vector<Mask> sets;
  std::vector<std::vector<Mask>> through;
};

PathSets path_sets_of(const std::vector<KPath>& paths, int n) {
  PathSets ps;
  ps.sets.reserve(paths.size());
  for (const auto& p : paths) ps.sets.push_back(mask_of(p));
  std::sort(ps.sets.begin(), ps.sets.end());
  ps.sets.erase(std::unique(ps.sets.begin(), ps.sets.end()), ps.sets.end());
  ps.through.resize(static_cast<std::size_t>(n));
  for (Mask m : ps.sets) {
    for (Mask it = m; it; it &= it - 1) ps.through[std::countr_zero(it)].push_back(m);
  }
  return ps;
}

void check_order(const Graph& g, const OracleBudget& budget) {
  const int cap = std::min(budget.max_vertices, 31);
  if (g.order() > cap) {
    throw ResourceExceeded("exact oracle limited to " + std::to_string(cap) + " vertices, graph has " +
                           std::to_string(g.order()));
  }
}

}  // namespace

PathOracle::PathOracle(const Graph& g, int k, OracleBudget budget) : g_(g), k_(k), budget_(budget) {
  if (k < 1) throw InvalidInput("k must be positive");
  check_order(g, budget);
  all_ = g.order() == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << g.order()) - 1);
  paths_ = enumerate_kpaths(g, k, budget.max_paths);
  auto ps = path_sets_of(paths_, g.order());
  sets_ = std::move(ps.sets);
  sets_through_ = std::move(ps.through);
}

Mask PathOracle::core(Mask s, Vertex* busiest) const {
  Mask c = 0;
  int counts[32] = {};
  for (Mask p : sets_) {
    if ((p & s) != p) continue;
    c |= p;
    for (Mask it = p; it; it &= it - 1) ++counts[std::countr_zero(it)];
  }
  if (busiest != nullptr) {
    int best = -1;
    for (Mask it = c; it; it &= it - 1) {
      int v = std::countr_zero(it);
      if (counts[v] > best) {
        best = counts[v];
        *busiest = v;
      }
    }
  }
  return c;
}

void PathOracle::charge() {
  if (nu_memo_.size() + tau_memo_.size() >= budget_.max_states) {
    throw ResourceExceeded("oracle state budget of " + std::to_string(budget_.max_states) + " exhausted");
  }
}

// Either the busiest vertex v is unused, or some path through v is taken.
int PathOracle::nu(Mask s) {
  Vertex v = 0;
  const Mask c = core(s, &v);
  if (c == 0) return 0;
  if (auto it = nu_memo_.find(c); it != nu_memo_.end()) return it->second;
  const int cap = std::popcount(c) / k_;
  int best = nu(c & ~bit(v));
  for (Mask p : sets_through_[v]) {
    if (best == cap) break;
    if ((p & c) == p) best = std::max(best, 1 + nu(c & ~p));
  }
  charge();
  nu_memo_.emplace(c, best);
  return best;
}

// Some vertex of any remaining path must be in the cover. A greedy disjoint
// packing is a lower bound that ends the branching early.
int PathOracle::tau(Mask s) {
  const Mask c = core(s, nullptr);
  if (c == 0) return 0;
  if (auto it = tau_memo_.find(c); it != tau_memo_.end()) return it->second;
  int lower = 0;
  Mask used = 0, first = 0;
  for (Mask p : sets_) {
    if ((p & c) != p) continue;
    if (first == 0) first = p;
    if ((p & used) == 0) {
      used |= p;
      ++lower;
    }
  }
  int best = std::popcount(c);
  for (Mask it = first; it; it &= it - 1) {
    best = std::min(best, 1 + tau(c & ~bit(std::countr_zero(it))));
    if (best == lower) break;
  }
  charge();
  tau_memo_.emplace(c, best);
  return best;
}

KMatching PathOracle::max_matching(Mask s) {
  int remaining = nu(s);
  Mask cur = s;
  std::vector<KPath> chosen;
  while (remaining > 0) {
    bool found = false;
    for (const auto& p : paths_) {
      Mask m = mask_of(p);
      if ((m & cur) == m && nu(cur & ~m) == remaining - 1) {
        chosen.push_back(p);
        cur &= ~m;
        --remaining;
        found = true;
        break;
      }
    }
    if (!found) throw Error("internal: no path extends the maximum matching");
  }
  return make_matching(std::move(chosen));
}

// Scanning ascending and keeping every vertex whose removal lowers τ by one
// yields the lexicographically least minimum cover.
KVertexCover PathOracle::min_cover(Mask s) {
  int remaining = tau(s);
  Mask cur = s;
  std::vector<Vertex> chosen;
  for (Mask it = s; it && remaining > 0; it &= it - 1) {
    Vertex v = std::countr_zero(it);
    if (tau(cur & ~bit(v)) == remaining - 1) {
      chosen.push_back(v);
      cur &= ~bit(v);
      --remaining;
    }
  }
  if (remaining != 0) throw Error("internal: cover construction fell short");
  return make_cover(std::move(chosen));
}

std::vector<KVertexCover> PathOracle::all_min_covers(Mask s) {
  const int t = tau(s);
  std::vector<Mask> inside;
  for (Mask p : sets_) {
    if ((p & s) == p) inside.push_back(p);
  }
  std::set<Mask> found;
  std::size_t nodes = 0;
  auto search = [&](auto&& self, Mask chosen, int depth) -> void {
    if (++nodes > budget_.max_states) throw ResourceExceeded("cover enumeration budget exhausted");
    auto miss = std::find_if(inside.begin(), inside.end(), [&](Mask p) { return (p & chosen) == 0; });
    if (miss == inside.end()) {
      found.insert(chosen);
      return;
    }
    if (depth == t) return;
    for (Mask it = *miss; it; it &= it - 1) self(self, chosen | bit(std::countr_zero(it)), depth + 1);
  };
  search(search, 0, 0);
  std::vector<KVertexCover> covers;
  for (Mask m : found) {
    std::vector<Vertex> vs;
    for (Mask it = m; it; it &= it - 1) vs.push_back(std::countr_zero(it));
    covers.push_back(KVertexCover{std::move(vs)});
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

std::pair<int, KMatching> nu_k(const Graph& g, int k, OracleBudget budget) {
  PathOracle oracle(g, k, budget);
  int value = oracle.nu();
  return {value, oracle.max_matching(oracle.all())};
}

std::pair<int, KVertexCover> tau_k(const Graph& g, int k, OracleBudget budget) {
  PathOracle oracle(g, k, budget);
  int value = oracle.tau();
  return {value, oracle.min_cover(oracle.all())};
}

std::vector<KVertexCover> all_min_covers(const Graph& g, int k, OracleBudget budget) {
  PathOracle oracle(g, k, budget);
  return oracle.all_min_covers(oracle.all());
}

namespace {

// Bottom-up over all subsets of one connected graph. Subsets come before
// their supersets in numeric order, so every lookup is already filled.
bool subset_table_equal(const Graph& g, int k, const OracleBudget& budget) {
  const int n = g.order();
  if (n > budget.max_table_vertices) {
    throw ResourceExceeded("subset table limited to components of " + std::to_string(budget.max_table_vertices) +
                           " vertices, component has " + std::to_string(n));
  }
  auto ps = path_sets_of(enumerate_kpaths(g, k, budget.max_paths), n);
  if (ps.sets.empty()) return true;
  const std::size_t total = std::size_t{1} << n;
  std::vector<Mask> witness(total, 0);
  std::vector<std::uint8_t> nu(total, 0), tau(total, 0);
  for (Mask s = 1; s < total; ++s) {
    Mask w = 0;
    for (Mask it = s; it && w == 0; it &= it - 1) w = witness[s & ~PathOracle::bit(std::countr_zero(it))];
    if (w == 0 && std::popcount(s) == k && std::binary_search(ps.sets.begin(), ps.sets.end(), s)) w = s;
    witness[s] = w;
    if (w == 0) continue;
    const int v = std::countr_zero(w);
    int packed = nu[s & ~PathOracle::bit(v)];
    for (Mask p : ps.through[v]) {
      if ((p & s) == p) packed = std::max(packed, 1 + nu[s & ~p]);
    }
    int covered = n;
    for (Mask it = w; it; it &= it - 1) covered = std::min(covered, 1 + tau[s & ~PathOracle::bit(std::countr_zero(it))]);
    if (packed != covered) return false;
    nu[s] = static_cast<std::uint8_t>(packed);
    tau[s] = static_cast<std::uint8_t>(covered);
  }
  return true;
}

}  // namespace

// ν_k and τ_k add over components and ν_k ≤ τ_k holds in each, so the
// property can be checked one component at a time.
bool in_Gk(const Graph& g, int k, OracleBudget budget) {
  if (k < 1) throw InvalidInput("k must be positive");
  if (k == 1) return true;
  for (const auto& comp : connected_components(g)) {
    if (static_cast<int>(comp.size()) < k) continue;
    auto sub = induced_subgraph(g, comp);
    if (!subset_table_equal(sub.graph, k, budget)) return false;
  }
  return true;
}

// Isolated vertices carry no k-path for k >= 2, so spanning subgraphs (V, F)
// represent every subgraph.
bool in_Gk_all_subgraphs(const Graph& g, int k, OracleBudget budget) {
  if (k < 1) throw InvalidInput("k must be positive");
  if (k == 1) return true;
  if (!in_Gk(g, k, budget)) return false;
  const int m = g.size();
  if (m >= 63 || (std::uint64_t{1} << m) > budget.max_states) {
    throw ResourceExceeded("edge-subset enumeration over " + std::to_string(m) + " edges exceeds the state budget");
  }
  const auto& edges = g.edges();
  for (std::uint64_t f = 0; f < (std::uint64_t{1} << m); ++f) {
    std::vector<Edge> kept;
    for (int i = 0; i < m; ++i) {
      if ((f >> i) & 1u) kept.push_back(edges[static_cast<std::size_t>(i)]);
    }
    if (static_cast<int>(kept.size()) < k - 1) continue;
    PathOracle oracle(Graph(g.order(), std::move(kept)), k, budget);
    if (oracle.nu() != oracle.tau()) return false;
  }
  return true;
}

}  // namespace kpath
