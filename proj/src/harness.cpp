#include "kpath/harness.hpp"

#include <omp.h>

#include <chrono>
#include <sstream>

#include "kpath/canonical.hpp"
#include "kpath/error.hpp"
#include "kpath/io.hpp"
#include "kpath/lp.hpp"
#include "kpath/recognition.hpp"

namespace kpath {

namespace {

constexpr std::pair<CheckKind, const char*> kNames[] = {
    {CheckKind::Theorem5, "theorem5"},       {CheckKind::Theorem6, "theorem6"},
    {CheckKind::Theorem7, "theorem7"},       {CheckKind::Conjecture2, "conjecture2"},
    {CheckKind::Degeneracy, "degeneracy"},   {CheckKind::Filters, "filters"},
    {CheckKind::LpDuality, "lp-duality"},    {CheckKind::LpExtraction, "lp-extraction"},
};

// What one graph contributes to a report.
struct Outcome {
  bool skipped = false;
  bool member = false;
  bool mismatch = false;
  int min_degree = 0;
};

Outcome evaluate(const Graph& g, CheckKind kind, int k, const OracleBudget& budget) {
  Outcome out;
  out.min_degree = g.order() == 0 ? 0 : g.min_degree();
  try {
    switch (kind) {
      case CheckKind::Theorem5:
        out.member = in_Gk(g, 3, budget);
        out.mismatch = recognize_h3(g).member != out.member;
        break;
      case CheckKind::Theorem6:
        out.member = in_Gk(g, 4, budget);
        out.mismatch = recognize_h4(g).member != out.member;
        break;
      case CheckKind::Theorem7: {
        out.member = in_Gk(g, k, budget);
        auto report = recognize_hk_prime(g, k);
        out.mismatch = (report.member && report.girth_ok) != out.member;
        break;
      }
      case CheckKind::Conjecture2:
        out.member = in_Gk(g, k, budget);
        out.mismatch = in_Gk_all_subgraphs(g, k, budget) != out.member;
        break;
      case CheckKind::Degeneracy:
        out.member = in_Gk(g, k, budget);
        out.mismatch = out.member && out.min_degree > k;
        break;
      case CheckKind::Filters:
        out.member = in_Gk(g, k, budget);
        if (out.member) {
          auto f = cycle_filters(g, k);
          out.skipped = f.status == FilterStatus::Inconclusive;
          out.mismatch = f.status == FilterStatus::Fail;
        }
        break;
      case CheckKind::LpDuality: {
        Rational ps = nu_star(g, k, budget), cs = tau_star(g, k, budget);
        int nu = nu_k(g, k, budget).first, tau = tau_k(g, k, budget).first;
        out.member = nu == tau;
        out.mismatch = ps != cs || Rational(nu) > ps || ps > Rational(tau);
        break;
      }
      case CheckKind::LpExtraction: {
        out.member = in_Gk(g, k, budget);
        if (out.member) {
          int nu = nu_k(g, k, budget).first;
          auto ex = lp_extract_certificates(g, k, budget);
          out.mismatch = !ex.in_class || ex.matching.size() != nu || ex.cover.size() != nu;
        }
        break;
      }
    }
  } catch (const ResourceExceeded&) {
    out = Outcome{};
    out.skipped = true;
  }
  return out;
}

VerificationReport merge(const std::vector<Graph>& graphs, const std::vector<Outcome>& outcomes, CheckKind kind,
                         int k, bool table) {
  VerificationReport r;
  r.check = check_name(kind);
  r.k = k;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Outcome& o = outcomes[i];
    ++r.scanned;
    if (o.skipped) ++r.skipped;
    if (o.member) {
      ++r.members;
      r.max_member_min_degree = std::max(r.max_member_min_degree, o.min_degree);
    }
    if (o.mismatch) {
      ++r.mismatches;
      r.counterexamples.push_back(canonical_edge_list(graphs[i]));
    }
    if (table) {
      r.table.push_back(io::encode_graph6(canonical_form(graphs[i])) + " " + (o.skipped ? "skipped" : o.member ? "1" : "0") +
                        " " + std::to_string(o.min_degree));
    }
  }
  return r;
}

double since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

const char* check_name(CheckKind kind) {
  for (auto [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<CheckKind> parse_check(const std::string& name) {
  for (auto [k, n] : kNames) {
    if (name == n) return k;
  }
  return std::nullopt;
}

bool VerificationReport::operator==(const VerificationReport& o) const {
  return check == o.check && k == o.k && scanned == o.scanned && members == o.members && mismatches == o.mismatches &&
         skipped == o.skipped && max_member_min_degree == o.max_member_min_degree &&
         counterexamples == o.counterexamples && table == o.table;
}

std::string VerificationReport::text() const {
  std::ostringstream out;
  out << "check: " << check << " k=" << k << '\n';
  out << "graphs: " << scanned << " members: " << members << " mismatches: " << mismatches << " skipped: " << skipped
      << '\n';
  if (max_member_min_degree >= 0) out << "max min-degree over members: " << max_member_min_degree << '\n';
  for (const auto& c : counterexamples) out << "counterexample: " << c << '\n';
  for (const auto& row : table) out << "table: " << row << '\n';
  return out.str();
}

std::string canonical_edge_list(const Graph& g) {
  Graph c = canonical_form(g);
  std::string out = std::to_string(c.order()) + " " + std::to_string(c.size()) + " |";
  for (const auto& e : c.edges()) out += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
  return out;
}

VerificationReport run_check(const std::vector<Graph>& graphs, CheckKind kind, int k, const HarnessOptions& options) {
  auto start = std::chrono::steady_clock::now();
  std::vector<Outcome> outcomes(graphs.size());
  const long long count = static_cast<long long>(graphs.size());
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
  for (long long i = 0; i < count; ++i) outcomes[i] = evaluate(graphs[i], kind, k, options.budget);
  auto report = merge(graphs, outcomes, kind, k, options.table);
  report.seconds = since(start);
  return report;
}

VerificationReport run_check_serial(const std::vector<Graph>& graphs, CheckKind kind, int k,
                                    const HarnessOptions& options) {
  auto start = std::chrono::steady_clock::now();
  std::vector<Outcome> outcomes;
  outcomes.reserve(graphs.size());
  for (const Graph& g : graphs) outcomes.push_back(evaluate(g, kind, k, options.budget));
  auto report = merge(graphs, outcomes, kind, k, options.table);
  report.seconds = since(start);
  return report;
}

VerificationReport verify_theorem(const EnumerationSpec& spec, const HarnessOptions& options) {
  if (spec.kind == CheckKind::Theorem5 && spec.k != 3) throw InvalidInput("theorem5 concerns k = 3");
  if (spec.kind == CheckKind::Theorem6 && spec.k != 4) throw InvalidInput("theorem6 concerns k = 4");
  if (spec.kind == CheckKind::Theorem7 && (spec.k < 3 || spec.k % 2 == 0 || spec.min_girth < spec.k)) {
    throw InvalidInput("theorem7 needs an odd k >= 3 and girth bound at least k");
  }
  return run_check(enumerate_graphs(spec), spec.kind, spec.k, options);
}

VerificationReport probe_conjecture2(int max_n, int k, const HarnessOptions& options) {
  EnumerationSpec spec{1, max_n, false, 0, k, CheckKind::Conjecture2};
  return run_check(enumerate_graphs(spec), CheckKind::Conjecture2, k, options);
}

VerificationReport probe_conjecture1_data(int max_n, int k, const HarnessOptions& options) {
  EnumerationSpec spec{1, max_n, false, 0, k, CheckKind::Degeneracy};
  HarnessOptions with_table = options;
  with_table.table = true;
  return run_check(enumerate_graphs(spec), CheckKind::Degeneracy, k, with_table);
}

}  // namespace kpath
