#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ldraw {

/// Dense vertex identifier in [0, n).
using Vertex = int;

struct Edge {
    Vertex src = 0;
    Vertex dst = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Immutable simple directed graph: no self-loops, at most one copy of each
/// ordered pair. Antiparallel pairs (u,v), (v,u) are allowed.
///
/// Adjacency is stored in CSR form with neighbor lists sorted ascending.
/// Every vertex carries a display label (defaults to its decimal id).
class DirectedGraph {
public:
    DirectedGraph() = default;

    /// Builds a graph on vertices 0..n-1. Duplicate edges are collapsed.
    /// Throws InvalidInput on out-of-range endpoints, self-loops, or a label
    /// vector whose size differs from n.
    DirectedGraph(int n, std::vector<Edge> edges, std::vector<std::string> labels = {});

    int vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Edges in lexicographic (src, dst) order.
    std::span<const Edge> edges() const noexcept { return edges_; }

    std::span<const Vertex> out_neighbors(Vertex v) const;
    std::span<const Vertex> in_neighbors(Vertex v) const;

    /// Union of in- and out-neighbors, sorted, without duplicates.
    std::vector<Vertex> undirected_neighbors(Vertex v) const;

    bool has_edge(Vertex u, Vertex v) const;

    const std::string& label(Vertex v) const;
    std::span<const std::string> labels() const noexcept { return labels_; }

    /// Graph with every edge reversed; labels preserved.
    DirectedGraph reversed() const;

    bool operator==(const DirectedGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> out_offsets_{0};
    std::vector<Vertex> out_targets_;
    std::vector<std::size_t> in_offsets_{0};
    std::vector<Vertex> in_sources_;
    std::vector<std::string> labels_;
};

DirectedGraph complete_graph(int n);

/// Connectivity of the underlying undirected graph. The empty graph counts as connected.
bool is_weakly_connected(const DirectedGraph& g);

// --- text formats -----------------------------------------------------------

/// Edge list: one "src dst" pair per line. A line holding a single token
/// declares an isolated vertex. '#' starts a comment; blank lines are ignored.
/// Vertices are renumbered densely in first-appearance order.
DirectedGraph parse_edge_list(std::string_view text);

/// DOT subset: `digraph [name] { a -> b; c; a -> b -> c; }` with bare or
/// double-quoted identifiers and no attributes.
DirectedGraph parse_dot(std::string_view text);

/// Dispatches on content: input whose first token is `digraph` is read as DOT,
/// everything else as an edge list.
DirectedGraph parse_graph(std::string_view text);

std::string to_edge_list(const DirectedGraph& g);
std::string to_dot(const DirectedGraph& g);

// --- generation and traversal -----------------------------------------------

/// floor(n(n-1)p/100), the edge count of a density-p cell.
std::int64_t gnm_edge_count(int n, int density_percent);

/// Uniform directed G(n, m) with m = gnm_edge_count(n, p), redrawn until weakly
/// connected. Throws InvalidInput if n < 2, p is outside [0, 100], or m < n-1.
DirectedGraph random_connected_gnm(int n, int density_percent, std::uint64_t seed);

/// BFS over the underlying undirected graph from `start`. With a shuffle seed
/// every adjacency list is permuted before the traversal; without one, neighbors
/// are visited in ascending id order. Throws InvalidInput if g is not weakly
/// connected or start is out of range.
std::vector<Vertex> bfs_order(const DirectedGraph& g, Vertex start,
                              std::optional<std::uint64_t> shuffle_seed = std::nullopt);

} // namespace ldraw
