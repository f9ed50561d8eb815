#include <sstream>

#include "kpath/error.hpp"
#include "kpath/lp.hpp"

namespace kpath {

void LpProblem::validate() const {
  if (kinds.size() != rows.size() || rhs.size() != rows.size()) {
    throw InvalidInput("LP rows, row kinds and right-hand sides differ in count");
  }
  for (const auto& row : rows) {
    if (row.size() != objective.size()) throw InvalidInput("LP row length differs from the number of variables");
  }
}

namespace {

class Tableau {
 public:
  explicit Tableau(const LpProblem& p) : m_(p.constraints()), n_(p.variables()) {
    sigma_.assign(static_cast<std::size_t>(m_), 1);
    std::vector<int> slack_of(static_cast<std::size_t>(m_), -1);
    int next = n_;
    for (int i = 0; i < m_; ++i) {
      if (p.kinds[i] != RowKind::Equal) slack_of[i] = next++;
    }
    first_artificial_ = next;
    std::vector<int> art_of(static_cast<std::size_t>(m_), -1);
    for (int i = 0; i < m_; ++i) {
      if (p.rhs[i].sign() < 0) sigma_[i] = -1;
      const bool slack_is_unit = p.kinds[i] != RowKind::Equal &&
                                 sigma_[i] * (p.kinds[i] == RowKind::LessEqual ? 1 : -1) == 1;
      if (!slack_is_unit) art_of[i] = next++;
    }
    cols_ = next;
    t_.assign(static_cast<std::size_t>(m_), std::vector<Rational>(static_cast<std::size_t>(cols_) + 1));
    basis_.resize(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) {
      const Rational s(sigma_[i]);
      auto& row = t_[i];
      for (int j = 0; j < n_; ++j) {
        if (!p.rows[i][j].is_zero()) row[j] = s * p.rows[i][j];
      }
      if (slack_of[i] >= 0) row[slack_of[i]] = Rational(sigma_[i] * (p.kinds[i] == RowKind::LessEqual ? 1 : -1));
      if (art_of[i] >= 0) row[art_of[i]] = Rational(1);
      row[cols_] = s * p.rhs[i];
      basis_[i] = art_of[i] >= 0 ? art_of[i] : slack_of[i];
    }
    unit_column_ = basis_;
  }

  bool has_artificials() const { return first_artificial_ < cols_; }
  bool is_artificial(int j) const { return j >= first_artificial_; }

  // Returns false when the objective is unbounded.
  bool optimise(const std::vector<Rational>& cost, bool allow_artificial) {
    reduced_.assign(static_cast<std::size_t>(cols_) + 1, Rational());
    for (int i = 0; i < m_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb.is_zero()) continue;
      for (int j = 0; j <= cols_; ++j) {
        if (!t_[i][j].is_zero()) reduced_[j] += cb * t_[i][j];
      }
    }
    for (int j = 0; j < cols_; ++j) reduced_[j] -= cost[j];
    while (true) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j) {
        if (!allow_artificial && is_artificial(j)) continue;
        if (reduced_[j].sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < m_; ++i) {
        if (t_[i][enter].sign() <= 0) continue;
        Rational ratio = t_[i][cols_] / t_[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void pivot(int r, int c) {
    ++pivots_;
    auto& prow = t_[r];
    const Rational inv = Rational(1) / prow[c];
    std::vector<int> nz;
    for (int j = 0; j <= cols_; ++j) {
      if (prow[j].is_zero()) continue;
      prow[j] *= inv;
      nz.push_back(j);
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (row[c].is_zero()) return;
      const Rational f = row[c];
      for (int j : nz) row[j] -= f * prow[j];
    };
    for (int i = 0; i < m_; ++i) {
      if (i != r) eliminate(t_[i]);
    }
    if (!reduced_.empty()) eliminate(reduced_);
    basis_[r] = c;
  }

  // Pivots zero-level artificials out of the basis where a real column allows it.
  void expel_artificials() {
    reduced_.clear();
    for (int i = 0; i < m_; ++i) {
      if (!is_artificial(basis_[i])) continue;
      for (int j = 0; j < first_artificial_; ++j) {
        if (!t_[i][j].is_zero()) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  const Rational& objective_value() const { return reduced_[cols_]; }
  int columns() const { return cols_; }
  int pivots() const { return pivots_; }
  const std::vector<int>& basis() const { return basis_; }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(static_cast<std::size_t>(n_));
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = t_[i][cols_];
    }
    return x;
  }

  // y = c_B B^{-1}, read off the reduced costs of the columns that formed the
  // initial identity (their phase-two cost is zero).
  std::vector<Rational> dual() const {
    std::vector<Rational> y(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) y[i] = sigma_[i] < 0 ? -reduced_[unit_column_[i]] : reduced_[unit_column_[i]];
    return y;
  }

 private:
  int m_, n_, cols_ = 0, first_artificial_ = 0, pivots_ = 0;
  std::vector<int> sigma_;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> reduced_;
  std::vector<int> basis_, unit_column_;
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
  problem.validate();
  Tableau tableau(problem);
  LpSolution solution;
  const int cols = tableau.columns();

  if (tableau.has_artificials()) {
    std::vector<Rational> phase1(static_cast<std::size_t>(cols));
    for (int j = 0; j < cols; ++j) {
      if (tableau.is_artificial(j)) phase1[j] = Rational(-1);
    }
    tableau.optimise(phase1, true);
    if (tableau.objective_value().sign() < 0) {
      solution.status = LpStatus::Infeasible;
      solution.pivots = tableau.pivots();
      return solution;
    }
    tableau.expel_artificials();
  }

  const bool maximise = problem.sense == Sense::Maximize;
  std::vector<Rational> cost(static_cast<std::size_t>(cols));
  for (int j = 0; j < problem.variables(); ++j) cost[j] = maximise ? problem.objective[j] : -problem.objective[j];
  if (!tableau.optimise(cost, false)) {
    solution.status = LpStatus::Unbounded;
    solution.pivots = tableau.pivots();
    return solution;
  }

  solution.value = maximise ? tableau.objective_value() : -tableau.objective_value();
  solution.primal = tableau.primal();
  solution.dual = tableau.dual();
  if (!maximise) {
    for (auto& y : solution.dual) y = -y;
  }
  solution.basis = tableau.basis();
  solution.pivots = tableau.pivots();
  if (auto defect = check_optimality(problem, solution)) throw Error("internal: simplex certificate failed: " + *defect);
  return solution;
}

std::optional<std::string> check_optimality(const LpProblem& p, const LpSolution& s) {
  const int m = p.constraints(), n = p.variables();
  if (s.status != LpStatus::Optimal) return std::string("solution is not optimal");
  if (static_cast<int>(s.primal.size()) != n || static_cast<int>(s.dual.size()) != m) {
    return std::string("certificate dimensions do not match the problem");
  }
  const bool maximise = p.sense == Sense::Maximize;
  Rational primal_value, dual_value;
  for (int j = 0; j < n; ++j) {
    if (s.primal[j].sign() < 0) return "x" + std::to_string(j) + " is negative";
    primal_value += p.objective[j] * s.primal[j];
  }
  for (int i = 0; i < m; ++i) {
    Rational lhs;
    for (int j = 0; j < n; ++j) {
      if (!p.rows[i][j].is_zero() && !s.primal[j].is_zero()) lhs += p.rows[i][j] * s.primal[j];
    }
    const int slack_sign = (lhs - p.rhs[i]).sign();
    const RowKind kind = p.kinds[i];
    if ((kind == RowKind::LessEqual && slack_sign > 0) || (kind == RowKind::GreaterEqual && slack_sign < 0) ||
        (kind == RowKind::Equal && slack_sign != 0)) {
      return "row " + std::to_string(i) + " is violated";
    }
    const int y = s.dual[i].sign();
    // Sign pattern of the dual multiplier for this row kind and sense.
    int required = 0;
    if (kind == RowKind::LessEqual) required = maximise ? 1 : -1;
    if (kind == RowKind::GreaterEqual) required = maximise ? -1 : 1;
    if (required != 0 && y * required < 0) return "dual y" + std::to_string(i) + " has the wrong sign";
    if (y != 0 && slack_sign != 0) return "complementary slackness fails on row " + std::to_string(i);
    dual_value += p.rhs[i] * s.dual[i];
  }
  for (int j = 0; j < n; ++j) {
    Rational d;
    for (int i = 0; i < m; ++i) {
      if (!p.rows[i][j].is_zero() && !s.dual[i].is_zero()) d += p.rows[i][j] * s.dual[i];
    }
    const int gap = (d - p.objective[j]).sign();
    if ((maximise && gap < 0) || (!maximise && gap > 0)) return "dual constraint " + std::to_string(j) + " is violated";
    if (gap != 0 && !s.primal[j].is_zero()) return "complementary slackness fails on column " + std::to_string(j);
  }
  if (primal_value != dual_value) return "primal " + primal_value.str() + " differs from dual " + dual_value.str();
  if (primal_value != s.value) return std::string("reported value differs from the primal objective");
  return std::nullopt;
}

namespace {

void write_linear(std::ostream& out, const std::vector<Rational>& coeffs) {
  bool first = true;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const Rational& c = coeffs[j];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (first) {
      out << (negative ? "- " : "");
    } else {
      out << (negative ? " - " : " + ");
    }
    Rational magnitude = negative ? -c : c;
    if (magnitude != Rational(1)) out << magnitude << ' ';
    out << 'x' << j;
    first = false;
  }
  if (first) out << '0';
}

}  // namespace

std::string lp_text(const LpProblem& p) {
  p.validate();
  std::ostringstream out;
  out << (p.sense == Sense::Maximize ? "Maximize" : "Minimize") << "\n obj: ";
  write_linear(out, p.objective);
  out << "\nSubject To\n";
  for (int i = 0; i < p.constraints(); ++i) {
    out << " c" << i << ": ";
    write_linear(out, p.rows[i]);
    const char* op = p.kinds[i] == RowKind::LessEqual ? "<=" : (p.kinds[i] == RowKind::GreaterEqual ? ">=" : "=");
    out << ' ' << op << ' ' << p.rhs[i] << '\n';
  }
  out << "Bounds\n";
  for (int j = 0; j < p.variables(); ++j) out << " x" << j << " >= 0\n";
  out << "End\n";
  return out.str();
}

}  // namespace kpath
