#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kpath/graph.hpp"

namespace kpath {

/// A block written as Sub_k(h). h vertex i is host vertex anchor_of[i];
/// interiors[e] lists the subdivision vertices of h edge e from edge.u to edge.v.
struct SubdivisionBlock {
  int k = 1;
  Multigraph h;
  std::vector<Vertex> anchor_of;
  std::vector<std::vector<Vertex>> interiors;

  /// Edges of Sub_k(h) in host ids, sorted.
  std::vector<Edge> host_edges() const;
  /// Index of host vertex v in h, or -1.
  int h_index(Vertex v) const;
};

/// T(p): K_{2,p} plus the edge xy. Fan vertices are sorted.
struct TpBlock {
  int p = 0;
  Vertex x = 0;
  Vertex y = 0;
  std::vector<Vertex> fan;
};

enum class BlockKind { Trivial, Subdivision, K4Endblock, T2Endblock, TpBlock, Violation };

struct BlockReport {
  int id = 0;
  std::vector<Vertex> vertices;
  BlockKind kind = BlockKind::Trivial;
  std::optional<SubdivisionBlock> subdivision;
  std::optional<TpBlock> tp;
  std::string detail;  // violation reason

  /// "trivial", "sub3 H=...", "K4-endblock", "T(2)-endblock", "T(p)" or "violation: ...".
  std::string classification() const;
};

struct RecognitionReport {
  bool member = true;
  std::vector<BlockReport> blocks;  // ordered by block id
  std::string witness;              // empty for members

  /// Girth precondition of the odd-k class; always true for the other recognizers.
  bool girth_ok = true;
  std::optional<int> girth;

  /// Stable text form: "block <id>: <classification>" lines, the verdict, and
  /// the witness when there is one.
  std::string text() const;
};

RecognitionReport recognize_h3(const Graph& g);
RecognitionReport recognize_h4(const Graph& g);
/// k odd and at least 3; throws InvalidInput otherwise.
RecognitionReport recognize_hk_prime(const Graph& g, int k);

/// Recognizer for the class attached to k: H3 for k = 3, H4 for k = 4, H'_k for
/// other odd k. Returns nullopt when no structural recognizer applies.
std::optional<RecognitionReport> recognize(const Graph& g, int k);

/// Recognises a block isomorphic to T(p) for some p >= 1.
std::optional<TpBlock> match_tp(const Block& block);

enum class FilterStatus { Pass, Fail, Inconclusive };

struct FilterResult {
  FilterStatus status = FilterStatus::Pass;
  std::string witness;
};

/// Necessary conditions on cycles: orders of cycles of order >= k are
/// multiples of k, and for k = 3 (k = 4) two vertices of a cycle with
/// neighbours off the cycle are at distance 0 mod 3 (0 mod 2, cycle order >= 4).
/// Blocks larger than max_block_vertices make the result inconclusive.
FilterResult cycle_filters(const Graph& g, int k, int max_block_vertices = 16);

}  // namespace kpath
