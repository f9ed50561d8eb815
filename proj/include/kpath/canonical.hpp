#pragma once

#include <string>
#include <vector>

#include "kpath/graph.hpp"

namespace kpath {

/// Largest order accepted by the canonical labeller.
inline constexpr int kMaxCanonicalOrder = 16;

/// perm[v] is the canonical position of v. Equal for isomorphic graphs up to
/// automorphisms; the relabelled graph is identical.
std::vector<Vertex> canonical_labeling(const Graph& g);

Graph canonical_form(const Graph& g);

/// graph6 text of canonical_form(g).
std::string canonical_key(const Graph& g);

Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

Graph complement(const Graph& g);

}  // namespace kpath
