#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kpath/graph.hpp"
#include "kpath/oracle.hpp"
#include "kpath/paths.hpp"
#include "kpath/rational.hpp"

namespace kpath {

enum class Sense { Maximize, Minimize };
enum class RowKind { LessEqual, GreaterEqual, Equal };

/// optimise c.x subject to rows (A x ~ b) and x >= 0.
struct LpProblem {
  Sense sense = Sense::Maximize;
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> rows;
  std::vector<RowKind> kinds;
  std::vector<Rational> rhs;

  int variables() const { return static_cast<int>(objective.size()); }
  int constraints() const { return static_cast<int>(rows.size()); }
  /// Throws InvalidInput when the dimensions disagree.
  void validate() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Optimal primal and dual vectors. For a maximisation the dual satisfies
/// A^T y >= c with y_i >= 0 on <= rows and y_i <= 0 on >= rows; for a
/// minimisation the inequalities flip. Either way b.y equals the optimum.
struct LpSolution {
  LpStatus status = LpStatus::Optimal;
  Rational value;
  std::vector<Rational> primal;
  std::vector<Rational> dual;
  /// basis[i]: column basic in row i. Columns past the structural ones are
  /// slacks (one per inequality row, in row order) and then artificials.
  std::vector<int> basis;
  int pivots = 0;
};

/// Two-phase dense simplex over exact rationals with Bland's rule. Optimal
/// solutions are checked with check_optimality before they are returned.
LpSolution solve_lp(const LpProblem& problem);

/// Primal and dual feasibility, equal objectives and complementary slackness,
/// all exact. Returns the first violation found.
std::optional<std::string> check_optimality(const LpProblem& problem, const LpSolution& solution);

/// Plain-text dump in the usual "Maximize / Subject To / Bounds / End" layout
/// with coefficients written as p/q.
std::string lp_text(const LpProblem& problem);

/// Columns are the distinct vertex sets of k-paths in ascending bitmask order;
/// rows are the vertices of g.
LpProblem packing_lp(const Graph& g, int k, const OracleBudget& budget = OracleBudget::from_env());
/// One variable per vertex, one >= 1 row per distinct k-path vertex set.
LpProblem covering_lp(const Graph& g, int k, const OracleBudget& budget = OracleBudget::from_env());

Rational nu_star(const Graph& g, int k, const OracleBudget& budget = OracleBudget::from_env());
Rational tau_star(const Graph& g, int k, const OracleBudget& budget = OracleBudget::from_env());

struct Extraction {
  bool in_class = false;
  std::string reason;  // why extraction stopped, when in_class is false
  Rational value;
  std::vector<Vertex> reduced;  // vertex set of the minimal subgraph from the first phase
  KMatching matching;
  KVertexCover cover;
};

/// LP-driven certificate extraction: shrink g while ν* stays fixed, then peel
/// off k-paths and cover vertices whose deletion lowers the LP value by one.
/// The returned certificates are validated against g; any failure is reported
/// as not in class.
Extraction lp_extract_certificates(const Graph& g, int k, const OracleBudget& budget = OracleBudget::from_env());

struct IncidenceMatrix {
  std::vector<KPath> paths;                 // column labels
  std::vector<std::vector<int>> entries;    // entries[vertex][path] in {0,1}

  int rows() const { return static_cast<int>(entries.size()); }
  int cols() const { return static_cast<int>(paths.size()); }
};

/// Vertex versus k-path incidence matrix, one column per k-path.
IncidenceMatrix incidence_matrix(const Graph& g, int k, const OracleBudget& budget = OracleBudget::from_env());

struct SquareSubmatrix {
  std::vector<int> rows;
  std::vector<int> cols;
  long long determinant = 0;
};

/// Exact integer determinant by fraction-free elimination.
long long determinant(std::vector<std::vector<long long>> matrix);

/// First square submatrix of order <= max_order with |det| >= 2, searching by
/// order, then row subset, then column subset, each in lexicographic order.
std::optional<SquareSubmatrix> find_non_tu_witness(const std::vector<std::vector<int>>& matrix, int max_order);
inline std::optional<SquareSubmatrix> find_non_tu_witness(const IncidenceMatrix& m, int max_order) {
  return find_non_tu_witness(m.entries, max_order);
}

}  // namespace kpath
