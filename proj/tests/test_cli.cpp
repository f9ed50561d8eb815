#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "kpath/cli.hpp"
#include "kpath/io.hpp"
#include "support/generators.hpp"

using namespace kpath;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string edge_list(const Graph& g) { return io::to_edge_list(g); }

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  auto path = std::filesystem::temp_directory_path() / ("kpath_cli_test_" + name);
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("recognize") {
  auto r = run({"recognize", "--k", "3"}, edge_list(gen::cycle(9)));
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("verdict: member") != std::string::npos);

  auto bad = run({"recognize", "--k", "4"}, edge_list(gen::cycle(6)));
  CHECK(bad.code == cli::kNegative);
  CHECK(bad.out.find("non-member") != std::string::npos);

  auto oracle = run({"recognize", "--k", "2"}, edge_list(gen::cycle(5)));
  CHECK(oracle.code == cli::kNegative);
  CHECK(oracle.out.find("method: oracle") != std::string::npos);

  auto many = run({"recognize", "--k", "3", "--format", "graph6"},
                  io::encode_graph6(gen::cycle(9)) + "\n" + io::encode_graph6(gen::cycle(5)) + "\n");
  CHECK(many.code == cli::kNegative);
  std::istringstream lines(many.out);
  std::string a, b;
  std::getline(lines, a);
  std::getline(lines, b);
  CHECK(a.find(" member") != std::string::npos);
  CHECK(b.find("non-member") != std::string::npos);
}

TEST_CASE("solve then certify") {
  auto r = run({"solve", "--k", "4"}, edge_list(gen::cycle(8)));
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("method: structured:h4") != std::string::npos);
  CHECK(r.out.find("value: 2") != std::string::npos);

  auto cert = temp_file("c8", r.out);
  auto c = run({"certify", "--k", "4", "--certificate", cert.string()}, edge_list(gen::cycle(8)));
  CHECK(c.code == cli::kOk);
  CHECK(c.out.find("certified: nu = tau = 2") != std::string::npos);

  // The same certificate does not fit a different graph.
  auto wrong = run({"certify", "--k", "4", "--certificate", cert.string()}, edge_list(gen::path(8)));
  CHECK(wrong.code == cli::kNegative);

  // Every certificate solve prints is accepted by certify.
  gen::Rng rng(55);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = gen::random_graph(rng, gen::uniform(rng, 1, 9), 0.3);
    std::string k = std::to_string(gen::uniform(rng, 1, 5));
    auto s = run({"solve", "--k", k, "--trace"}, edge_list(g));
    REQUIRE(s.code == cli::kOk);
    auto path = temp_file("random", s.out);
    CHECK(run({"certify", "--k", k, "--certificate", path.string()}, edge_list(g)).code == cli::kOk);
  }
  std::filesystem::remove(cert);
}

TEST_CASE("output is deterministic") {
  auto a = run({"solve", "--k", "3", "--trace"}, edge_list(gen::cycle(12)));
  auto b = run({"solve", "--k", "3", "--trace"}, edge_list(gen::cycle(12)));
  CHECK(a.out == b.out);
  auto v1 = run({"verify", "--check", "theorem5", "--max-n", "6"});
  auto v2 = run({"verify", "--check", "theorem5", "--max-n", "6", "--serial"});
  CHECK(v1.code == cli::kOk);
  CHECK(v1.out == v2.out);
}

TEST_CASE("lp") {
  auto r = run({"lp", "--k", "2"}, edge_list(gen::cycle(5)));
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "nu*: 5/2\ntau*: 5/2\n");
  auto j = run({"lp", "--k", "2", "--json"}, edge_list(gen::cycle(5)));
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["nu_star"] == "5/2");
}

TEST_CASE("verify and conjecture") {
  auto v = run({"verify", "--check", "theorem6", "--max-n", "6", "--json"});
  CHECK(v.code == cli::kOk);
  auto parsed = nlohmann::json::parse(v.out);
  CHECK(parsed["mismatches"] == 0);
  CHECK(v.err.find("elapsed") != std::string::npos);

  auto c = run({"conjecture", "--which", "2", "--k", "2", "--max-n", "5"});
  CHECK(c.code == cli::kOk);
  CHECK(c.out.find("mismatches: 0") != std::string::npos);
  auto d = run({"conjecture", "--which", "1", "--k", "3", "--max-n", "5"});
  CHECK(d.code == cli::kOk);
  CHECK(d.out.find("table: ") != std::string::npos);

  auto unknown = run({"verify", "--check", "theorem9"});
  CHECK(unknown.code == cli::kUsage);
}

TEST_CASE("tu-check") {
  Graph spider = subdivide(gen::multigraph(4, {{0, 1}, {0, 2}, {0, 3}}), 3);
  auto r = run({"tu-check", "--k", "3", "--max-order", "3"}, edge_list(spider));
  CHECK(r.code == cli::kNegative);
  CHECK(r.out.find("witness: rows") != std::string::npos);
  auto none = run({"tu-check", "--k", "3", "--max-order", "3"}, edge_list(gen::path(3)));
  CHECK(none.code == cli::kOk);
}

TEST_CASE("usage and format errors") {
  CHECK(run({}).code == cli::kUsage);
  auto help = run({"--help"});
  CHECK(help.code == cli::kOk);
  CHECK(help.out.find("solve") != std::string::npos);
  CHECK(run({"solve", "--k", "3", "--bogus"}, edge_list(gen::path(3))).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"solve", "--k", "3", "--format", "xml"}, "").code == cli::kUsage);

  auto bad = run({"solve", "--k", "3"}, "3 2\n0 1\n0 9\n");
  CHECK(bad.code == cli::kUsage);
  CHECK(bad.err.find("line 3") != std::string::npos);

  auto missing = run({"solve", "--k", "3", "--input", "/nonexistent/graph.txt"});
  CHECK(missing.code == cli::kUsage);

  auto cert = temp_file("broken", "matching:\n0 1 x\n");
  CHECK(run({"certify", "--k", "3", "--certificate", cert.string()}, edge_list(gen::path(3))).code == cli::kUsage);
  std::filesystem::remove(cert);
}

TEST_CASE("budget exhaustion") {
  setenv("KPATH_BUDGET", "10", 1);
  auto r = run({"solve", "--k", "3"}, edge_list(gen::complete(11)));
  unsetenv("KPATH_BUDGET");
  CHECK(r.code == cli::kBudget);
  CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("input and output files") {
  auto in = temp_file("in", edge_list(gen::cycle(9)));
  auto out = std::filesystem::temp_directory_path() / "kpath_cli_test_out";
  auto r = run({"solve", "--k", "3", "--input", in.string(), "--output", out.string()});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.empty());
  std::ifstream file(out);
  std::stringstream text;
  text << file.rdbuf();
  CHECK(text.str().find("value: 3") != std::string::npos);
  std::filesystem::remove(in);
  std::filesystem::remove(out);
}
