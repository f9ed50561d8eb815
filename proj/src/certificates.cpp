#include <algorithm>
#include <charconv>
#include <sstream>

#include "kpath/error.hpp"
#include "kpath/lp.hpp"
#include "kpath/solver.hpp"

namespace kpath {

namespace {

SolveResult from_pair(KMatching matching, KVertexCover cover, std::string method) {
  SolveResult r;
  r.nu = matching.size();
  r.tau = cover.size();
  r.matching = std::move(matching);
  r.cover = std::move(cover);
  r.method = std::move(method);
  return r;
}

}  // namespace

SolveResult solve(const Graph& g, int k, const OracleBudget& budget) {
  if (k < 1) throw InvalidInput("k must be positive");
  if (k == 1) {
    std::vector<KPath> paths;
    std::vector<Vertex> all;
    for (Vertex v = 0; v < g.order(); ++v) {
      paths.push_back(KPath{{v}});
      all.push_back(v);
    }
    return from_pair(make_matching(std::move(paths)), make_cover(std::move(all)), "trivial");
  }
  if (is_forest(g)) return solve_forest(g, k);
  if (k == 2) {
    if (auto side = bipartition(g)) {
      auto cert = bipartite_matching(g, *side);
      std::vector<KPath> paths;
      for (const auto& e : cert.matching) paths.push_back(KPath{{e.u, e.v}});
      return from_pair(make_matching(std::move(paths)), make_cover(cert.cover), "bipartite");
    }
  }
  if (k == 3 && recognize_h3(g).member) return solve_hk_prime(g, 3);
  if (k == 4 && recognize_h4(g).member) return solve_h4(g);
  if (k >= 5 && k % 2 == 1 && recognize_hk_prime(g, k).member) return solve_hk_prime(g, k);

  auto extraction = lp_extract_certificates(g, k, budget);
  if (extraction.in_class) return from_pair(std::move(extraction.matching), std::move(extraction.cover), "lp-extraction");

  auto [nu, matching] = nu_k(g, k, budget);
  auto [tau, cover] = tau_k(g, k, budget);
  return from_pair(std::move(matching), std::move(cover), "oracle");
}

std::string format_certificate(const SolveResult& result) {
  std::ostringstream out;
  out << "matching:\n";
  for (const auto& p : result.matching.paths) {
    for (std::size_t i = 0; i < p.vertices.size(); ++i) out << (i ? " " : "") << p.vertices[i];
    out << '\n';
  }
  out << "cover:\n";
  for (std::size_t i = 0; i < result.cover.vertices.size(); ++i) out << (i ? " " : "") << result.cover.vertices[i];
  out << '\n';
  if (result.nu == result.tau) {
    out << "value: " << result.nu << '\n';
  } else {
    out << "value: nu=" << result.nu << " tau=" << result.tau << '\n';
  }
  return out.str();
}

namespace {

std::vector<Vertex> parse_ids(const std::string& line, int line_no) {
  std::vector<Vertex> ids;
  std::istringstream in(line);
  std::string token;
  while (in >> token) {
    Vertex v = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || end != token.data() + token.size() || v < 0) {
      throw FormatError(line_no, "expected a vertex id, got '" + token + "'");
    }
    ids.push_back(v);
  }
  return ids;
}

}  // namespace

ParsedCertificate parse_certificate(const std::string& text) {
  ParsedCertificate cert;
  enum class Section { None, Matching, Cover, Done } section = Section::None;
  bool cover_seen = false;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::vector<KPath> paths;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line == "matching:") {
      if (section != Section::None) throw FormatError(line_no, "unexpected 'matching:'");
      section = Section::Matching;
      continue;
    }
    if (line == "cover:") {
      if (section != Section::Matching) throw FormatError(line_no, "'cover:' must follow the matching");
      section = Section::Cover;
      continue;
    }
    if (line.rfind("value:", 0) == 0) {
      if (section != Section::Cover) throw FormatError(line_no, "'value:' must follow the cover");
      std::string rest = line.substr(6);
      if (rest.find('=') == std::string::npos) {
        auto ids = parse_ids(rest, line_no);
        if (ids.size() != 1) throw FormatError(line_no, "expected one value");
        cert.value = ids[0];
      }
      section = Section::Done;
      continue;
    }
    switch (section) {
      case Section::None:
        // Blank lines and the solver's method and trace lines may precede the certificate.
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (line.rfind("method:", 0) == 0 || line.rfind("step ", 0) == 0) continue;
        throw FormatError(line_no, "expected 'matching:'");
      case Section::Matching: {
        auto ids = parse_ids(line, line_no);
        if (ids.empty()) throw FormatError(line_no, "empty path line");
        paths.push_back(KPath{std::move(ids)});
        break;
      }
      case Section::Cover:
        if (cover_seen) throw FormatError(line_no, "the cover takes a single line");
        cover_seen = true;
        cert.cover = make_cover(parse_ids(line, line_no));
        break;
      case Section::Done:
        if (line.find_first_not_of(" \t") != std::string::npos) throw FormatError(line_no, "text after 'value:'");
        break;
    }
  }
  if (section == Section::None || section == Section::Matching) throw FormatError(line_no, "missing 'cover:' section");
  cert.matching = make_matching(std::move(paths));
  return cert;
}

}  // namespace kpath
