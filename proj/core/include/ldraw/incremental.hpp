#pragma once

#include "ldraw/graph.hpp"
#include "ldraw/layout.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace ldraw {

// Insertion positions are 1-based. Inserting a new line at position i on an
// axis with n occupied lines shifts every coordinate >= i up by one; i = 1 and
// i = n + 1 prepend and append.
//
// On the x-axis a new vertex v pays for
//   stretch  - every existing row segment [W, E] with W < i <= E grows by one,
//   incoming - v's own row spans its in-neighbors' columns and i,
//   outgoing - each out-neighbor's row segment must reach column i.
// The y-axis is the mirror image: column segments are stretched, v's own
// column spans its out-neighbors' rows, and each in-neighbor's column segment
// must reach row i.

/// Stretch cost at one position: |{ j : W_j < i <= E_j }|.
/// Throws InvalidInput unless 1 <= i <= extents.size() + 1.
std::int64_t stretch_ink(std::span<const Interval> extents, int position);

/// Range of { shifted neighbor coordinates } u { i }, 0 for no neighbors.
std::int64_t incoming_ink(std::span<const int> neighbor_coords, int position);

/// Sum over target segments of the distance from i to the shifted segment,
/// zero when i falls inside it.
std::int64_t outgoing_ink(std::span<const Interval> target_extents, int position);

// Whole-profile versions: element [i - 1] holds the value at position i, for
// i = 1..n+1. Each runs in O(n + k) using counting sweeps.
std::vector<std::int64_t> stretch_ink_profile(std::span<const Interval> extents);
std::vector<std::int64_t> incoming_ink_profile(std::span<const int> neighbor_coords, int n);
std::vector<std::int64_t> outgoing_ink_profile(std::span<const Interval> target_extents, int n);

/// Per-position insertion cost on one axis.
struct AddInkProfile {
    Axis axis = Axis::x;
    std::vector<std::int64_t> stretch;
    std::vector<std::int64_t> incoming;
    std::vector<std::int64_t> outgoing;
    std::vector<std::int64_t> total;
    int best_position = 1; ///< lowest position attaining the minimum total

    int positions() const noexcept { return static_cast<int>(total.size()); }
    std::int64_t best_cost() const { return total.at(static_cast<std::size_t>(best_position - 1)); }
};

/// Assembles the three sweeps. `extents` are the segments of all n existing
/// vertices on this axis, `range_coords` the coordinates spanned by the new
/// vertex's own segment, and `target_extents` the segments the new vertex's
/// edges must reach.
AddInkProfile add_ink_profile(Axis axis, std::span<const Interval> extents, std::span<const int> range_coords,
                              std::span<const Interval> target_extents);

/// Result of placing one vertex into an existing drawing.
struct Placement {
    Layout layout; ///< layout of the extended graph; the new vertex has id n
    AddInkProfile x;
    AddInkProfile y;
};

/// Places a new vertex (id = prev.vertex_count()) with the given neighbors into
/// `prev_layout` using minimum additional ink among all layouts whose
/// permutations extend the previous ones.
Placement opt_add_vertex(const DirectedGraph& prev, const Layout& prev_layout,
                         std::span<const Vertex> out_neighbors, std::span<const Vertex> in_neighbors);

/// Incremental drawing state for a fixed graph. Vertices are added one at a
/// time; only edges between placed vertices are drawn. Extents are maintained
/// incrementally, so each addition costs O(n + deg).
class IncrementalDrawer {
public:
    struct Step {
        Vertex vertex = 0;
        AddInkProfile x;
        AddInkProfile y;
    };

    explicit IncrementalDrawer(const DirectedGraph& g);

    /// Places v at the argmin of both axis profiles. Throws InvalidInput if v is
    /// out of range or already placed.
    Step add(Vertex v);

    bool is_placed(Vertex v) const;
    int placed_count() const noexcept { return static_cast<int>(placed_.size()); }

    /// Ink of the current partial drawing (sum of chosen insertion costs).
    std::int64_t ink() const noexcept { return ink_; }

    /// Coordinates of placed vertices in insertion order of `placed_vertices()`.
    std::span<const Vertex> placed_vertices() const noexcept { return placed_; }
    int x(Vertex v) const { return x_.at(static_cast<std::size_t>(v)); }
    int y(Vertex v) const { return y_.at(static_cast<std::size_t>(v)); }

    /// Complete layout. Throws InvalidInput unless every vertex has been placed.
    Layout layout() const;

private:
    const DirectedGraph* g_;
    std::vector<int> x_;
    std::vector<int> y_;
    std::vector<Interval> row_;
    std::vector<Interval> col_;
    std::vector<Vertex> placed_;
    std::int64_t ink_ = 0;
};

using StepCallback = std::function<void(const IncrementalDrawer::Step&)>;

/// Adds vertices in the given order; the first lands at (1, 1).
Layout draw_in_order(const DirectedGraph& g, std::span<const Vertex> order, const StepCallback& on_step = {});

/// BFS order from `start` (adjacency shuffled by `order_seed` when given), then
/// draw_in_order. Throws InvalidInput for graphs that are not weakly connected.
Layout incremental_draw(const DirectedGraph& g, Vertex start, std::optional<std::uint64_t> order_seed,
                        const StepCallback& on_step = {});

} // namespace ldraw
