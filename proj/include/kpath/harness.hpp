#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kpath/graph.hpp"
#include "kpath/oracle.hpp"

namespace kpath {

enum class CheckKind { Theorem5, Theorem6, Theorem7, Conjecture2, Degeneracy, Filters, LpDuality, LpExtraction };

const char* check_name(CheckKind kind);
std::optional<CheckKind> parse_check(const std::string& name);

struct EnumerationSpec {
  int min_n = 1;
  int max_n = 1;
  bool connected = true;
  int min_girth = 0;  // 0: no bound
  int k = 3;
  CheckKind kind = CheckKind::Theorem5;
  int cap = 10;  // largest n the generator accepts
};

/// Every graph of order n (connected ones only when asked, girth at least
/// min_girth), one per isomorphism class, as canonical forms ordered by size
/// and then by graph6 text.
std::vector<Graph> enumerate_graphs(int n, bool connected, int min_girth = 0, int cap = 10);
std::vector<Graph> enumerate_graphs(const EnumerationSpec& spec);

struct VerificationReport {
  std::string check;
  int k = 0;
  long long scanned = 0;
  long long members = 0;      // oracle members of G_k
  long long mismatches = 0;
  long long skipped = 0;      // budget exceeded
  int max_member_min_degree = -1;
  std::vector<std::string> counterexamples;  // canonical edge lists
  std::vector<std::string> table;            // graph6, membership, min degree
  double seconds = 0;                        // not part of text()

  bool operator==(const VerificationReport& o) const;
  /// Deterministic text; leaves out the timing.
  std::string text() const;
};

struct HarnessOptions {
  int threads = 0;  // 0: OpenMP default
  bool table = false;
  OracleBudget budget = OracleBudget::from_env();
};

/// Runs one check on every graph, in parallel.
VerificationReport run_check(const std::vector<Graph>& graphs, CheckKind kind, int k, const HarnessOptions& options = {});
/// Same check, one graph after the other; the reference for run_check.
VerificationReport run_check_serial(const std::vector<Graph>& graphs, CheckKind kind, int k,
                                    const HarnessOptions& options = {});

VerificationReport verify_theorem(const EnumerationSpec& spec, const HarnessOptions& options = {});
/// Induced-subgraph against all-subgraph membership; differences are findings.
VerificationReport probe_conjecture2(int max_n, int k, const HarnessOptions& options = {});
/// Membership table and the minimum-degree statistic over members.
VerificationReport probe_conjecture1_data(int max_n, int k, const HarnessOptions& options = {});

/// "n m | u-v u-v ..." of the canonical form.
std::string canonical_edge_list(const Graph& g);

}  // namespace kpath
