#include <algorithm>

#include "kpath/error.hpp"
#include "kpath/lp.hpp"

namespace kpath {

namespace {

std::vector<std::vector<Vertex>> distinct_path_sets(const Graph& g, int k, const OracleBudget& budget) {
  std::vector<std::vector<Vertex>> sets;
  for (auto& p : enumerate_kpaths(g, k, budget.max_paths)) {
    std::sort(p.vertices.begin(), p.vertices.end());
    sets.push_back(std::move(p.vertices));
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

Rational lp_value(const LpProblem& p) {
  LpSolution s = solve_lp(p);
  if (s.status != LpStatus::Optimal) throw Error("internal: path LP not optimal");
  return s.value;
}

Graph without(const Graph& g, const std::vector<bool>& removed, std::vector<Vertex>* kept = nullptr) {
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!removed[v]) rest.push_back(v);
  }
  auto sub = induced_subgraph(g, rest);
  if (kept != nullptr) *kept = std::move(sub.original);
  return std::move(sub.graph);
}

}  // namespace

LpProblem packing_lp(const Graph& g, int k, const OracleBudget& budget) {
  auto sets = distinct_path_sets(g, k, budget);
  LpProblem p;
  p.sense = Sense::Maximize;
  p.objective.assign(sets.size(), Rational(1));
  p.rows.assign(static_cast<std::size_t>(g.order()), std::vector<Rational>(sets.size()));
  for (std::size_t j = 0; j < sets.size(); ++j) {
    for (Vertex v : sets[j]) p.rows[v][j] = Rational(1);
  }
  p.kinds.assign(static_cast<std::size_t>(g.order()), RowKind::LessEqual);
  p.rhs.assign(static_cast<std::size_t>(g.order()), Rational(1));
  return p;
}

LpProblem covering_lp(const Graph& g, int k, const OracleBudget& budget) {
  auto sets = distinct_path_sets(g, k, budget);
  LpProblem p;
  p.sense = Sense::Minimize;
  p.objective.assign(static_cast<std::size_t>(g.order()), Rational(1));
  for (const auto& set : sets) {
    std::vector<Rational> row(static_cast<std::size_t>(g.order()));
    for (Vertex v : set) row[v] = Rational(1);
    p.rows.push_back(std::move(row));
  }
  p.kinds.assign(sets.size(), RowKind::GreaterEqual);
  p.rhs.assign(sets.size(), Rational(1));
  return p;
}

Rational nu_star(const Graph& g, int k, const OracleBudget& budget) { return lp_value(packing_lp(g, k, budget)); }

Rational tau_star(const Graph& g, int k, const OracleBudget& budget) { return lp_value(covering_lp(g, k, budget)); }

Extraction lp_extract_certificates(const Graph& g, int k, const OracleBudget& budget) {
  Extraction result;
  result.value = nu_star(g, k, budget);
  auto fail = [&](std::string why) {
    result.in_class = false;
    result.reason = "not in class: " + why;
    return result;
  };
  if (!result.value.is_integer()) return fail("fractional LP value " + result.value.str());
  const long long target = result.value.floor().get_si();
  const int n = g.order();

  // Shrink to a minimal induced subgraph with the same LP value.
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      if (removed[v]) continue;
      removed[v] = true;
      if (nu_star(without(g, removed), k, budget) == result.value) {
        changed = true;
        break;
      }
      removed[v] = false;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) result.reduced.push_back(v);
  }

  // Paths of the reduced graph whose deletion lowers the value by exactly one.
  std::vector<KPath> paths;
  Rational current = result.value;
  for (long long step = 0; step < target; ++step) {
    std::vector<Vertex> kept;
    Graph rest = without(g, removed, &kept);
    bool found = false;
    for (const auto& p : enumerate_kpaths(rest, k, budget.max_paths)) {
      std::vector<bool> trial = removed;
      for (Vertex v : p.vertices) trial[kept[v]] = true;
      if (nu_star(without(g, trial), k, budget) == current - Rational(1)) {
        KPath host;
        for (Vertex v : p.vertices) host.vertices.push_back(kept[v]);
        paths.push_back(canonical_path(std::move(host.vertices)));
        removed = std::move(trial);
        current -= Rational(1);
        found = true;
        break;
      }
    }
    if (!found) return fail("no k-path lowers the LP value by one at value " + current.str());
  }

  // Cover vertices, taken from the whole graph: a minimum cover of the reduced
  // graph need not cover the paths it no longer contains.
  std::vector<Vertex> cover;
  std::vector<bool> deleted(static_cast<std::size_t>(n), false);
  current = result.value;
  for (long long step = 0; step < target; ++step) {
    bool found = false;
    for (Vertex v = 0; v < n && !found; ++v) {
      if (deleted[v]) continue;
      deleted[v] = true;
      if (tau_star(without(g, deleted), k, budget) == current - Rational(1)) {
        cover.push_back(v);
        current -= Rational(1);
        found = true;
      } else {
        deleted[v] = false;
      }
    }
    if (!found) return fail("no vertex lowers the LP value by one at value " + current.str());
  }

  result.matching = make_matching(std::move(paths));
  result.cover = make_cover(std::move(cover));
  if (result.matching.size() != result.cover.size()) return fail("matching and cover sizes differ");
  if (auto defect = check_matching(g, k, result.matching)) return fail("matching invalid: " + *defect);
  if (auto defect = check_cover(g, k, result.cover)) return fail("cover invalid: " + *defect);
  result.in_class = true;
  return result;
}

IncidenceMatrix incidence_matrix(const Graph& g, int k, const OracleBudget& budget) {
  IncidenceMatrix m;
  m.paths = enumerate_kpaths(g, k, budget.max_paths);
  m.entries.assign(static_cast<std::size_t>(g.order()), std::vector<int>(m.paths.size(), 0));
  for (std::size_t j = 0; j < m.paths.size(); ++j) {
    for (Vertex v : m.paths[j].vertices) m.entries[v][j] = 1;
  }
  return m;
}

}  // namespace kpath
