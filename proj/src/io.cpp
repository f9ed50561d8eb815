#include "kpath/io.hpp"

#include <charconv>
#include <sstream>

#include "kpath/error.hpp"

namespace kpath::io {

namespace {

std::vector<long long> parse_integers(std::string_view line, int line_no) {
  std::vector<long long> values;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || ptr != line.data() + j) {
      throw FormatError(line_no, "expected an integer, got '" + std::string(line.substr(i, j - i)) + "'");
    }
    values.push_back(value);
    i = j;
  }
  return values;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  int line_no = 0;
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto values = parse_integers(line, line_no);
    if (values.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (values.size() != 2) throw FormatError(line_no, "expected two integers");
    if (n < 0) {
      n = values[0];
      m = values[1];
      if (n < 0 || m < 0) throw FormatError(line_no, "negative header value");
      if (n > 1'000'000) throw FormatError(line_no, "vertex count too large");
    } else {
      long long u = values[0], v = values[1];
      if (static_cast<long long>(edges.size()) == m) throw FormatError(line_no, "more edges than declared");
      if (u < 0 || v >= n || u >= v) {
        throw FormatError(line_no, "edge must satisfy 0 <= u < v < n");
      }
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    if (end == text.size()) break;
  }
  if (n < 0) throw FormatError(line_no, "missing 'n m' header");
  if (static_cast<long long>(edges.size()) != m) {
    throw FormatError(line_no, "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  try {
    return Graph(static_cast<int>(n), std::move(edges));
  } catch (const InvalidInput& e) {
    throw FormatError(line_no, e.what());
  }
}

Graph read_edge_list(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

Graph decode_graph6(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (line.empty()) throw InvalidInput("empty graph6 string");
  for (char c : line) {
    if (c < 63 || c > 126) throw InvalidInput("byte outside the graph6 range 63..126");
  }
  auto byte = [&](std::size_t i) { return static_cast<unsigned>(line[i]) - 63u; };
  std::size_t n = 0, body = 0;
  if (line[0] != 126) {
    n = byte(0);
    body = 1;
  } else {
    if (line.size() < 4) throw InvalidInput("truncated graph6 size field");
    if (line[1] == 126) throw InvalidInput("graph6 orders above 258047 are not supported");
    n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
    if (n < 63) throw InvalidInput("non-minimal graph6 size field");
    body = 4;
  }
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (line.size() - body != expected) {
    throw InvalidInput("graph6 body has " + std::to_string(line.size() - body) + " bytes, expected " +
                       std::to_string(expected));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      unsigned group = byte(body + k / 6);
      if ((group >> (5 - k % 6)) & 1u) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    }
  }
  if (expected > 0) {
    unsigned last = byte(line.size() - 1);
    const std::size_t used = bits - (expected - 1) * 6;
    if (used < 6 && (last & ((1u << (6 - used)) - 1u)) != 0) throw InvalidInput("nonzero graph6 padding bits");
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string encode_graph6(const Graph& g) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  if (n > 258047) throw InvalidInput("graph too large for graph6");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  unsigned group = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::string_view view = line;
    if (line_no == 1 && view.starts_with(">>graph6<<")) view.remove_prefix(10);
    try {
      graphs.push_back(decode_graph6(view));
    } catch (const InvalidInput& e) {
      throw FormatError(line_no, e.what());
    }
  }
  return graphs;
}

}  // namespace kpath::io
