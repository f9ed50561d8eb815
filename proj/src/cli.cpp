#include "kpath/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "kpath/error.hpp"
#include "kpath/harness.hpp"
#include "kpath/io.hpp"
#include "kpath/lp.hpp"
#include "kpath/recognition.hpp"
#include "kpath/solver.hpp"

namespace kpath::cli {

namespace {

using nlohmann::json;

struct Common {
  int k = 0;
  std::string format = "edgelist";
  std::string input = "-";
  std::string output = "-";
  bool json = false;
};

void add_common(CLI::App* sub, Common& c, bool needs_k) {
  auto* k = sub->add_option("--k", c.k, "path order k");
  k->check(CLI::Range(1, 64));
  if (needs_k) k->required();
  sub->add_option("--format", c.format, "input format")->check(CLI::IsMember({"edgelist", "graph6"}));
  sub->add_option("--input", c.input, "input path, - for stdin");
  sub->add_option("--output", c.output, "output path, - for stdout");
  sub->add_flag("--json", c.json, "machine-readable output");
}

std::vector<Graph> read_graphs(const Common& c, std::istream& in) {
  std::ifstream file;
  std::istream* src = &in;
  if (c.input != "-") {
    file.open(c.input);
    if (!file) throw InvalidInput("cannot open " + c.input);
    src = &file;
  }
  if (c.format == "graph6") return io::read_graph6_stream(*src);
  return {io::read_edge_list(*src)};
}

json path_list(const KMatching& m) {
  json out = json::array();
  for (const auto& p : m.paths) out.push_back(p.vertices);
  return out;
}

json edge_list(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back({e.u, e.v});
  return out;
}

json solve_json(const SolveResult& r) {
  json steps = json::array();
  for (const auto& s : r.trace.steps) {
    KMatching m{s.paths};
    steps.push_back({{"rule", rule_name(s.rule)},
                     {"removed_vertices", s.removed_vertices},
                     {"removed_edges", edge_list(s.removed_edges)},
                     {"paths", path_list(m)},
                     {"cover", s.cover},
                     {"delta", s.delta}});
  }
  return {{"method", r.method}, {"nu", r.nu},         {"tau", r.tau},
          {"matching", path_list(r.matching)}, {"cover", r.cover.vertices}, {"trace", steps}};
}

std::string trace_text(const ReductionTrace& trace) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    out << "step " << i << ": " << rule_name(s.rule) << " delta " << s.delta;
    if (!s.removed_vertices.empty()) {
      out << " removes";
      for (Vertex v : s.removed_vertices) out << ' ' << v;
    }
    if (!s.removed_edges.empty()) out << " deletes " << format_edges(s.removed_edges);
    out << '\n';
  }
  return out.str();
}

json recognition_json(const RecognitionReport& r) {
  json blocks = json::array();
  for (const auto& b : r.blocks) blocks.push_back({{"id", b.id}, {"vertices", b.vertices}, {"classification", b.classification()}});
  json out = {{"member", r.member}, {"girth_ok", r.girth_ok}, {"blocks", blocks}, {"witness", r.witness}};
  out["girth"] = r.girth ? json(*r.girth) : json(nullptr);
  return out;
}

json report_json(const VerificationReport& r) {
  return {{"check", r.check},
          {"k", r.k},
          {"graphs", r.scanned},
          {"members", r.members},
          {"mismatches", r.mismatches},
          {"skipped", r.skipped},
          {"max_member_min_degree", r.max_member_min_degree},
          {"counterexamples", r.counterexamples},
          {"table", r.table},
          {"seconds", r.seconds}};
}

int report_code(const VerificationReport& r) {
  if (r.mismatches > 0) return kNegative;
  return r.skipped > 0 ? kBudget : kOk;
}

// One graph in, some text out; graph6 mode joins the per-graph lines.
struct Emitter {
  const Common& c;
  std::ostream& out;
  bool many() const { return c.format == "graph6"; }

  void json_line(const json& j) { out << j.dump(many() ? -1 : 2) << '\n'; }
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"König-Egerváry checks for k-path packing and covering", "kpath"};
  app.require_subcommand(1);

  Common c;
  auto* solve_cmd = app.add_subcommand("solve", "nu_k and tau_k with certificates");
  add_common(solve_cmd, c, true);
  bool show_trace = false;
  solve_cmd->add_flag("--trace", show_trace, "print the reduction steps");

  auto* recognize_cmd = app.add_subcommand("recognize", "structural membership test");
  add_common(recognize_cmd, c, true);

  auto* certify_cmd = app.add_subcommand("certify", "check a matching/cover certificate");
  add_common(certify_cmd, c, true);
  std::string certificate_path;
  certify_cmd->add_option("--certificate", certificate_path, "certificate file")->required();

  auto* lp_cmd = app.add_subcommand("lp", "fractional nu* and tau*");
  add_common(lp_cmd, c, true);
  bool show_program = false;
  lp_cmd->add_flag("--program", show_program, "print the packing LP");

  auto* verify_cmd = app.add_subcommand("verify", "exhaustive theorem checks");
  add_common(verify_cmd, c, false);
  std::string check = "theorem5";
  int min_n = 1, max_n = 6, min_girth = 0, threads = 0, cap = 10;
  bool all_graphs = false, serial = false;
  verify_cmd->add_option("--check", check, "theorem5|theorem6|theorem7|filters|degeneracy|lp-duality|lp-extraction");
  verify_cmd->add_option("--min-n", min_n)->check(CLI::Range(1, 16));
  verify_cmd->add_option("--max-n", max_n)->check(CLI::Range(1, 16));
  verify_cmd->add_option("--girth", min_girth, "girth lower bound");
  verify_cmd->add_option("--cap", cap, "largest order the generator accepts");
  verify_cmd->add_flag("--all", all_graphs, "include disconnected graphs");
  verify_cmd->add_option("--threads", threads);
  verify_cmd->add_flag("--serial", serial, "use the serial reference loop");

  auto* conjecture_cmd = app.add_subcommand("conjecture", "conjecture probes");
  add_common(conjecture_cmd, c, true);
  int which = 2;
  conjecture_cmd->add_option("--which", which)->check(CLI::IsMember({1, 2}));
  conjecture_cmd->add_option("--max-n", max_n)->check(CLI::Range(1, 16));
  conjecture_cmd->add_option("--threads", threads);

  auto* tu_cmd = app.add_subcommand("tu-check", "search the path incidence matrix for a non-unimodular minor");
  add_common(tu_cmd, c, true);
  int max_order = 3;
  tu_cmd->add_option("--max-order", max_order)->check(CLI::Range(1, 12));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (c.output != "-") {
    file.open(c.output);
    if (!file) {
      err << "error: cannot open " << c.output << '\n';
      return kUsage;
    }
    sink = &file;
  }
  std::ostream& o = *sink;
  Emitter emit{c, o};

  try {
    if (solve_cmd->parsed()) {
      for (const Graph& g : read_graphs(c, in)) {
        SolveResult r = solve(g, c.k);
        if (c.json) {
          emit.json_line(solve_json(r));
        } else if (emit.many()) {
          o << io::encode_graph6(g) << " method=" << r.method << " nu=" << r.nu << " tau=" << r.tau << '\n';
        } else {
          o << "method: " << r.method << '\n';
          if (show_trace) o << trace_text(r.trace);
          o << format_certificate(r);
        }
      }
      return kOk;
    }

    if (recognize_cmd->parsed()) {
      int code = kOk;
      for (const Graph& g : read_graphs(c, in)) {
        auto report = recognize(g, c.k);
        bool member;
        if (report) {
          member = report->member && report->girth_ok;
          if (c.json) {
            emit.json_line(recognition_json(*report));
          } else if (emit.many()) {
            o << io::encode_graph6(g) << ' ' << (member ? "member" : "non-member") << '\n';
          } else {
            o << report->text();
          }
        } else {
          member = in_Gk(g, c.k);
          if (c.json) {
            emit.json_line({{"member", member}, {"method", "oracle"}});
          } else if (emit.many()) {
            o << io::encode_graph6(g) << ' ' << (member ? "member" : "non-member") << '\n';
          } else {
            o << "method: oracle\nverdict: " << (member ? "member" : "non-member") << '\n';
          }
        }
        if (!member) code = kNegative;
      }
      return code;
    }

    if (certify_cmd->parsed()) {
      auto graphs = read_graphs(c, in);
      if (graphs.size() != 1) throw InvalidInput("certify takes exactly one graph");
      const Graph& g = graphs[0];
      std::ifstream cert_file(certificate_path);
      if (!cert_file) throw InvalidInput("cannot open " + certificate_path);
      std::stringstream buffer;
      buffer << cert_file.rdbuf();
      ParsedCertificate cert = parse_certificate(buffer.str());
      auto m_defect = check_matching(g, c.k, cert.matching);
      auto c_defect = check_cover(g, c.k, cert.cover);
      const int ms = cert.matching.size(), cs = cert.cover.size();
      std::optional<std::string> value_defect;
      if (cert.value && (*cert.value != ms || *cert.value != cs)) {
        value_defect = "claimed value " + std::to_string(*cert.value) + " but matching has " + std::to_string(ms) +
                       " paths and cover has " + std::to_string(cs) + " vertices";
      }
      const bool ok = !m_defect && !c_defect && !value_defect;
      if (c.json) {
        emit.json_line({{"matching_valid", !m_defect},
                        {"cover_valid", !c_defect},
                        {"matching_size", ms},
                        {"cover_size", cs},
                        {"certified", ok && ms == cs},
                        {"defects", json::array()}});
      } else {
        o << "matching: " << (m_defect ? "invalid: " + *m_defect : "valid (" + std::to_string(ms) + " paths)") << '\n';
        o << "cover: " << (c_defect ? "invalid: " + *c_defect : "valid (" + std::to_string(cs) + " vertices)") << '\n';
        if (value_defect) o << "value: " << *value_defect << '\n';
        if (ok && ms == cs) o << "certified: nu = tau = " << ms << '\n';
        if (ok && ms != cs) o << "bounds: " << ms << " <= nu <= tau <= " << cs << '\n';
      }
      return ok ? kOk : kNegative;
    }

    if (lp_cmd->parsed()) {
      for (const Graph& g : read_graphs(c, in)) {
        Rational ps = nu_star(g, c.k), cs = tau_star(g, c.k);
        if (c.json) {
          emit.json_line({{"nu_star", ps.str()}, {"tau_star", cs.str()}});
        } else if (emit.many()) {
          o << io::encode_graph6(g) << " nu*=" << ps << " tau*=" << cs << '\n';
        } else {
          if (show_program) o << lp_text(packing_lp(g, c.k));
          o << "nu*: " << ps << "\ntau*: " << cs << '\n';
        }
      }
      return kOk;
    }

    if (verify_cmd->parsed()) {
      auto kind = parse_check(check);
      if (!kind || *kind == CheckKind::Conjecture2) throw InvalidInput("unknown check '" + check + "'");
      int k = c.k;
      if (k == 0) k = *kind == CheckKind::Theorem6 ? 4 : *kind == CheckKind::Theorem7 ? 5 : 3;
      HarnessOptions options;
      options.threads = threads;
      std::vector<Graph> graphs;
      if (c.input != "-" || c.format == "graph6") {
        graphs = read_graphs(c, in);
      } else {
        EnumerationSpec spec{min_n, max_n, !all_graphs, min_girth, k, *kind, cap};
        if (*kind == CheckKind::Theorem7 && spec.min_girth < k) spec.min_girth = k;
        graphs = enumerate_graphs(spec);
      }
      auto report = serial ? run_check_serial(graphs, *kind, k, options) : run_check(graphs, *kind, k, options);
      if (c.json) {
        emit.json_line(report_json(report));
      } else {
        o << report.text();
      }
      err << "elapsed: " << report.seconds << " s\n";
      return report_code(report);
    }

    if (conjecture_cmd->parsed()) {
      HarnessOptions options;
      options.threads = threads;
      auto report = which == 1 ? probe_conjecture1_data(max_n, c.k, options) : probe_conjecture2(max_n, c.k, options);
      if (c.json) {
        emit.json_line(report_json(report));
      } else {
        o << report.text();
      }
      return report_code(report);
    }

    if (tu_cmd->parsed()) {
      int code = kOk;
      for (const Graph& g : read_graphs(c, in)) {
        auto witness = find_non_tu_witness(incidence_matrix(g, c.k), max_order);
        if (witness) code = kNegative;
        if (c.json) {
          json w = nullptr;
          if (witness) w = {{"rows", witness->rows}, {"cols", witness->cols}, {"determinant", witness->determinant}};
          emit.json_line({{"witness", w}});
        } else {
          if (emit.many()) o << io::encode_graph6(g) << ' ';
          if (witness) {
            o << "witness: rows";
            for (int r : witness->rows) o << ' ' << r;
            o << " cols";
            for (int col : witness->cols) o << ' ' << col;
            o << " det " << witness->determinant << '\n';
          } else {
            o << "no witness up to order " << max_order << '\n';
          }
        }
      }
      return code;
    }
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace kpath::cli
