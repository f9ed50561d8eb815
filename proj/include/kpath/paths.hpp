#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "kpath/graph.hpp"

namespace kpath {

/// A path on exactly k vertices, listed in path order with front() < back()
/// (a 1-path is a single vertex).
struct KPath {
  std::vector<Vertex> vertices;

  int order() const noexcept { return static_cast<int>(vertices.size()); }
  auto operator<=>(const KPath&) const = default;
};

/// Reverses `vertices` if needed so that the first endpoint is the smaller one.
KPath canonical_path(std::vector<Vertex> vertices);

struct KMatching {
  std::vector<KPath> paths;  // sorted

  int size() const noexcept { return static_cast<int>(paths.size()); }
  bool operator==(const KMatching&) const = default;
};

struct KVertexCover {
  std::vector<Vertex> vertices;  // sorted

  int size() const noexcept { return static_cast<int>(vertices.size()); }
  auto operator<=>(const KVertexCover&) const = default;
};

/// All k-paths of g, each once, sorted lexicographically. Throws
/// ResourceExceeded when more than `limit` paths exist.
std::vector<KPath> enumerate_kpaths(const Graph& g, int k,
                                    std::size_t limit = std::numeric_limits<std::size_t>::max());

bool has_kpath(const Graph& g, int k);
/// Some k-path of g, the lexicographically least one.
std::optional<KPath> find_kpath(const Graph& g, int k);

/// Number of vertices on a longest path of a forest.
int forest_longest_path(const Graph& forest);

/// Structural checks against the host graph. They return a description of the
/// first defect, or nullopt when the certificate is valid.
std::optional<std::string> check_path(const Graph& g, int k, const KPath& path);
std::optional<std::string> check_matching(const Graph& g, int k, const KMatching& matching);
std::optional<std::string> check_cover(const Graph& g, int k, const KVertexCover& cover);

/// Sorts the paths, canonicalising each one.
KMatching make_matching(std::vector<KPath> paths);
/// Sorts and deduplicates.
KVertexCover make_cover(std::vector<Vertex> vertices);

}  // namespace kpath
