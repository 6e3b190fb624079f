#pragma once

#include "ldraw/graph.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ldraw {

/// Vertex placement of an L-drawing. `xs[v]` is the column and `ys[v]` the row
/// of vertex v. A canonical layout uses each of 1..n exactly once per axis.
///
/// Every edge (u, v) is drawn as a vertical segment on column xs[u] from row
/// ys[u] to row ys[v], followed by a horizontal segment on row ys[v] from
/// column xs[u] to column xs[v].
struct Layout {
    std::vector<int> xs;
    std::vector<int> ys;

    int size() const noexcept { return static_cast<int>(xs.size()); }

    /// Vertex v at (v+1, v+1).
    static Layout diagonal(int n);

    bool operator==(const Layout&) const = default;
};

enum class Axis { x, y };

/// True when `coords` is a bijection onto {1, ..., coords.size()}.
bool is_permutation_of_positions(std::span<const int> coords);

/// Throws InvalidInput unless both axes of `layout` are bijections onto 1..n.
void validate_layout(const Layout& layout, int n);

/// Closed integer interval [lo, hi].
struct Interval {
    int lo = 0;
    int hi = 0;

    int length() const noexcept { return hi - lo; }
    bool contains(int c) const noexcept { return lo <= c && c <= hi; }
    bool operator==(const Interval&) const = default;
};

/// Occupied spans per vertex. `row[v]` is [W_v, E_v]: the columns touched on
/// v's row by v and by the bends of its incoming edges. `col[v]` is [S_v, N_v]:
/// the rows touched on v's column by v and the bends of its outgoing edges.
struct Extents {
    std::vector<Interval> row;
    std::vector<Interval> col;
};

/// Extents for arbitrary injective coordinates (need not be contiguous).
Extents compute_extents(const DirectedGraph& g, std::span<const int> xs, std::span<const int> ys);
Extents compute_extents(const DirectedGraph& g, const Layout& layout);

/// Longest segment leaving a vertex in each compass direction.
struct DirectionalInk {
    int east = 0;
    int west = 0;
    int north = 0; // toward larger row index
    int south = 0; // toward smaller row index
};

struct InkBreakdown {
    std::int64_t ink_x = 0; ///< horizontal ink
    std::int64_t ink_y = 0; ///< vertical ink
    std::int64_t ink = 0;
    std::vector<DirectionalInk> per_vertex;
};

/// Exact ink of the L-drawing, overlapping collinear portions counted once.
/// Accepts any injective coordinates; throws InvalidInput if either axis has a
/// repeated value or the sizes do not match the graph.
InkBreakdown compute_ink(const DirectedGraph& g, std::span<const int> xs, std::span<const int> ys);

/// Canonical form: additionally requires both axes to be permutations of 1..n.
InkBreakdown compute_ink(const DirectedGraph& g, const Layout& layout);

/// Horizontal ink, which depends on the column assignment alone.
std::int64_t horizontal_ink(const DirectedGraph& g, std::span<const int> xs);

/// Vertical ink, which depends on the row assignment alone.
std::int64_t vertical_ink(const DirectedGraph& g, std::span<const int> ys);

/// Ink of the complete digraph K_n placed on an (n+h) x (n+k) grid whose blank
/// lines all lie strictly between occupied ones: 2n(n-1) + n(h+k).
std::int64_t spread_ink_formula(std::int64_t n, std::int64_t h, std::int64_t k);

// --- serialization ----------------------------------------------------------

/// One "label x y" line per vertex, in vertex id order.
std::string layout_to_text(const DirectedGraph& g, const Layout& layout);

/// Reads "label x y" lines ('#' comments allowed) against the labels of g.
/// Throws ParseError on malformed lines or unknown/duplicate labels and
/// InvalidInput if the result is not a valid layout for g.
Layout parse_layout_text(const DirectedGraph& g, std::string_view text);

} // namespace ldraw
