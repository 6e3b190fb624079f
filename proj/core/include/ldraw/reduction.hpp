#pragma once

#include "ldraw/graph.hpp"
#include "ldraw/layout.hpp"

#include <cstdint>
#include <span>
#include <string>

namespace ldraw {

// Undirected graphs are represented as symmetric digraphs: {u, v} is stored as
// both (u, v) and (v, u). Neighborhoods are taken over the union of in- and
// out-neighbors, so a non-symmetric input is read as its underlying graph.

/// Profile of a linear arrangement: sum over u of pos[u] - min pos over N[u].
/// Throws InvalidInput unless `positions` is a permutation of 1..n.
std::int64_t profile_cost(const DirectedGraph& g, std::span<const int> positions);

/// Sum over i = 1..n of |{ u : some edge (u, v) has pos[u] <= i < pos[v] }|.
/// Throws InvalidInput unless `positions` is a permutation of 1..n.
std::int64_t sumcut_cost(const DirectedGraph& g, std::span<const int> positions);

/// Clique size of the gadget for an n-vertex base graph: (5n^2 + 9n)/2 + 1.
std::int64_t gadget_clique_size(std::int64_t n);

/// Ink budget of the gadget: k + 4p(p-1) + (3n^2 + 9n)/2.
std::int64_t gadget_ink_budget(std::int64_t n, std::int64_t k);

/// Minimum-ink instance encoding a profile instance (base graph, budget k).
///
/// Vertex ids: clique one is 0..p-1, clique two is p..2p-1, and the vertex
/// u_v standing for base vertex v is 2p + v. The anchors are the first vertex
/// of each clique.
struct ReductionInstance {
    std::int64_t base_vertices = 0;
    std::int64_t p = 0;
    std::int64_t k = 0;
    std::int64_t k_prime = 0;
    Vertex anchor1 = 0;
    Vertex anchor2 = 0;
    DirectedGraph graph;

    Vertex gadget_vertex(Vertex base_vertex) const { return static_cast<Vertex>(2 * p) + base_vertex; }
};

/// Builds the instance. Throws InvalidInput if the base graph is empty or not
/// symmetric.
ReductionInstance build_mild_instance(const DirectedGraph& base, std::int64_t k);

/// Layout that forwards a profile arrangement to the gadget: clique one in the
/// top-left block with anchor1 at its bottom-right corner, clique two in the
/// bottom-right block with anchor2 at its top-left corner, and the u_v between
/// them, ordered horizontally by `profile_positions` and vertically by id.
/// Its ink equals k' - k + profile_cost(base, profile_positions).
Layout witness_layout(const ReductionInstance& inst, std::span<const int> profile_positions);

/// Edge list preceded by a '#' metadata block (p, k, k', anchors).
std::string instance_to_text(const ReductionInstance& inst);

} // namespace ldraw
