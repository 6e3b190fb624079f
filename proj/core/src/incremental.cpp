#include "ldraw/incremental.hpp"

#include "ldraw/error.hpp"

#include <algorithm>
#include <limits>

namespace ldraw {

namespace {

int shifted(int coord, int position) { return coord >= position ? coord + 1 : coord; }

void check_position(int position, std::size_t n) {
    if (position < 1 || static_cast<std::size_t>(position) > n + 1)
        throw InvalidInput("insertion position " + std::to_string(position) + " outside 1.." + std::to_string(n + 1));
}

void check_in_grid(std::span<const Interval> extents, int n) {
    for (const Interval& iv : extents) {
        if (iv.lo < 1 || iv.hi > n || iv.lo > iv.hi)
            throw InvalidInput("extent [" + std::to_string(iv.lo) + ", " + std::to_string(iv.hi) +
                               "] outside the 1.." + std::to_string(n) + " grid");
    }
}

} // namespace

// --- pointwise definitions --------------------------------------------------

std::int64_t stretch_ink(std::span<const Interval> extents, int position) {
    check_position(position, extents.size());
    std::int64_t growth = 0;
    for (const Interval& iv : extents) {
        const int before = iv.hi - iv.lo;
        const int after = shifted(iv.hi, position) - shifted(iv.lo, position);
        growth += after - before;
    }
    return growth;
}

std::int64_t incoming_ink(std::span<const int> neighbor_coords, int position) {
    if (position < 1) throw InvalidInput("insertion position must be >= 1");
    int lo = position;
    int hi = position;
    for (int c : neighbor_coords) {
        const int s = shifted(c, position);
        lo = std::min(lo, s);
        hi = std::max(hi, s);
    }
    return hi - lo;
}

std::int64_t outgoing_ink(std::span<const Interval> target_extents, int position) {
    if (position < 1) throw InvalidInput("insertion position must be >= 1");
    std::int64_t total = 0;
    for (const Interval& iv : target_extents) {
        const int lo = shifted(iv.lo, position);
        const int hi = shifted(iv.hi, position);
        if (position < lo) total += lo - position;
        else if (position > hi) total += position - hi;
    }
    return total;
}

// --- sweeps -----------------------------------------------------------------

std::vector<std::int64_t> stretch_ink_profile(std::span<const Interval> extents) {
    const int n = static_cast<int>(extents.size());
    check_in_grid(extents, n);
    // A segment [W, E] is cut by positions W+1..E.
    std::vector<std::int64_t> delta(static_cast<std::size_t>(n) + 3, 0);
    for (const Interval& iv : extents) {
        if (iv.lo == iv.hi) continue;
        ++delta[static_cast<std::size_t>(iv.lo) + 1];
        --delta[static_cast<std::size_t>(iv.hi) + 1];
    }
    std::vector<std::int64_t> profile(static_cast<std::size_t>(n) + 1);
    std::int64_t running = 0;
    for (int i = 1; i <= n + 1; ++i) {
        running += delta[static_cast<std::size_t>(i)];
        profile[static_cast<std::size_t>(i - 1)] = running;
    }
    return profile;
}

std::vector<std::int64_t> incoming_ink_profile(std::span<const int> neighbor_coords, int n) {
    std::vector<std::int64_t> profile(static_cast<std::size_t>(n) + 1, 0);
    if (neighbor_coords.empty()) return profile;
    const auto [lo_it, hi_it] = std::minmax_element(neighbor_coords.begin(), neighbor_coords.end());
    const int lo = *lo_it;
    const int hi = *hi_it;
    for (int i = 1; i <= n + 1; ++i) {
        const int a = std::min(shifted(lo, i), i);
        const int b = std::max(shifted(hi, i), i);
        profile[static_cast<std::size_t>(i - 1)] = b - a;
    }
    return profile;
}

std::vector<std::int64_t> outgoing_ink_profile(std::span<const Interval> target_extents, int n) {
    check_in_grid(target_extents, n);
    const auto slots = static_cast<std::size_t>(n) + 2;
    std::vector<std::int64_t> lo_count(slots, 0), lo_sum(slots, 0), hi_count(slots, 0), hi_sum(slots, 0);
    for (const Interval& iv : target_extents) {
        ++lo_count[static_cast<std::size_t>(iv.lo)];
        lo_sum[static_cast<std::size_t>(iv.lo)] += iv.lo;
        ++hi_count[static_cast<std::size_t>(iv.hi)];
        hi_sum[static_cast<std::size_t>(iv.hi)] += iv.hi;
    }

    std::vector<std::int64_t> profile(static_cast<std::size_t>(n) + 1, 0);

    // Right-to-left over W: a segment with W >= i is shifted to W+1 and lies
    // W + 1 - i to the right of the new line.
    std::int64_t count = 0, sum = 0;
    for (int i = n + 1; i >= 1; --i) {
        count += lo_count[static_cast<std::size_t>(i)];
        sum += lo_sum[static_cast<std::size_t>(i)];
        profile[static_cast<std::size_t>(i - 1)] += sum + count * (1 - i);
    }
    // Left-to-right over E: a segment with E < i stays put and lies i - E to
    // the left of the new line.
    count = 0;
    sum = 0;
    for (int i = 1; i <= n + 1; ++i) {
        count += hi_count[static_cast<std::size_t>(i - 1)];
        sum += hi_sum[static_cast<std::size_t>(i - 1)];
        profile[static_cast<std::size_t>(i - 1)] += count * i - sum;
    }
    return profile;
}

AddInkProfile add_ink_profile(Axis axis, std::span<const Interval> extents, std::span<const int> range_coords,
                              std::span<const Interval> target_extents) {
    const int n = static_cast<int>(extents.size());
    AddInkProfile p;
    p.axis = axis;
    p.stretch = stretch_ink_profile(extents);
    p.incoming = incoming_ink_profile(range_coords, n);
    p.outgoing = outgoing_ink_profile(target_extents, n);
    p.total.resize(p.stretch.size());
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 0; i < p.total.size(); ++i) {
        p.total[i] = p.stretch[i] + p.incoming[i] + p.outgoing[i];
        if (p.total[i] < best) {
            best = p.total[i];
            p.best_position = static_cast<int>(i) + 1;
        }
    }
    return p;
}

// --- single insertion -------------------------------------------------------

Placement opt_add_vertex(const DirectedGraph& prev, const Layout& prev_layout, std::span<const Vertex> out_neighbors,
                         std::span<const Vertex> in_neighbors) {
    const int n = prev.vertex_count();
    validate_layout(prev_layout, n);
    for (Vertex u : out_neighbors)
        if (u < 0 || u >= n) throw InvalidInput("out-neighbor " + std::to_string(u) + " is not in the drawing");
    for (Vertex w : in_neighbors)
        if (w < 0 || w >= n) throw InvalidInput("in-neighbor " + std::to_string(w) + " is not in the drawing");

    const Extents ext = compute_extents(prev, prev_layout);

    std::vector<int> in_xs, out_ys;
    std::vector<Interval> out_rows, in_cols;
    for (Vertex u : out_neighbors) {
        out_ys.push_back(prev_layout.ys[static_cast<std::size_t>(u)]);
        out_rows.push_back(ext.row[static_cast<std::size_t>(u)]);
    }
    for (Vertex w : in_neighbors) {
        in_xs.push_back(prev_layout.xs[static_cast<std::size_t>(w)]);
        in_cols.push_back(ext.col[static_cast<std::size_t>(w)]);
    }

    Placement result;
    result.x = add_ink_profile(Axis::x, ext.row, in_xs, out_rows);
    result.y = add_ink_profile(Axis::y, ext.col, out_ys, in_cols);

    const int i = result.x.best_position;
    const int j = result.y.best_position;
    result.layout.xs.reserve(static_cast<std::size_t>(n) + 1);
    result.layout.ys.reserve(static_cast<std::size_t>(n) + 1);
    for (int v = 0; v < n; ++v) {
        result.layout.xs.push_back(shifted(prev_layout.xs[static_cast<std::size_t>(v)], i));
        result.layout.ys.push_back(shifted(prev_layout.ys[static_cast<std::size_t>(v)], j));
    }
    result.layout.xs.push_back(i);
    result.layout.ys.push_back(j);
    return result;
}

// --- incremental driver -----------------------------------------------------

IncrementalDrawer::IncrementalDrawer(const DirectedGraph& g)
    : g_(&g),
      x_(static_cast<std::size_t>(g.vertex_count()), 0),
      y_(static_cast<std::size_t>(g.vertex_count()), 0),
      row_(static_cast<std::size_t>(g.vertex_count())),
      col_(static_cast<std::size_t>(g.vertex_count())) {
    placed_.reserve(static_cast<std::size_t>(g.vertex_count()));
}

bool IncrementalDrawer::is_placed(Vertex v) const {
    if (v < 0 || v >= g_->vertex_count()) throw InvalidInput("vertex out of range: " + std::to_string(v));
    return x_[static_cast<std::size_t>(v)] != 0;
}

IncrementalDrawer::Step IncrementalDrawer::add(Vertex v) {
    if (is_placed(v)) throw InvalidInput("vertex " + std::to_string(v) + " is already placed");
    const auto vi = static_cast<std::size_t>(v);

    std::vector<Interval> rows, cols;
    rows.reserve(placed_.size());
    cols.reserve(placed_.size());
    for (Vertex u : placed_) {
        rows.push_back(row_[static_cast<std::size_t>(u)]);
        cols.push_back(col_[static_cast<std::size_t>(u)]);
    }

    std::vector<int> in_xs, out_ys;
    std::vector<Interval> out_rows, in_cols;
    std::vector<Vertex> outs, ins;
    for (Vertex u : g_->out_neighbors(v)) {
        if (!x_[static_cast<std::size_t>(u)]) continue;
        outs.push_back(u);
        out_ys.push_back(y_[static_cast<std::size_t>(u)]);
        out_rows.push_back(row_[static_cast<std::size_t>(u)]);
    }
    for (Vertex w : g_->in_neighbors(v)) {
        if (!x_[static_cast<std::size_t>(w)]) continue;
        ins.push_back(w);
        in_xs.push_back(x_[static_cast<std::size_t>(w)]);
        in_cols.push_back(col_[static_cast<std::size_t>(w)]);
    }

    Step step{v, add_ink_profile(Axis::x, rows, in_xs, out_rows), add_ink_profile(Axis::y, cols, out_ys, in_cols)};
    const int i = step.x.best_position;
    const int j = step.y.best_position;

    for (Vertex u : placed_) {
        const auto ui = static_cast<std::size_t>(u);
        x_[ui] = shifted(x_[ui], i);
        row_[ui] = {shifted(row_[ui].lo, i), shifted(row_[ui].hi, i)};
        y_[ui] = shifted(y_[ui], j);
        col_[ui] = {shifted(col_[ui].lo, j), shifted(col_[ui].hi, j)};
    }

    x_[vi] = i;
    y_[vi] = j;
    row_[vi] = {i, i};
    col_[vi] = {j, j};
    for (Vertex w : ins) {
        const auto wi = static_cast<std::size_t>(w);
        row_[vi].lo = std::min(row_[vi].lo, x_[wi]);
        row_[vi].hi = std::max(row_[vi].hi, x_[wi]);
        col_[wi].lo = std::min(col_[wi].lo, j);
        col_[wi].hi = std::max(col_[wi].hi, j);
    }
    for (Vertex u : outs) {
        const auto ui = static_cast<std::size_t>(u);
        col_[vi].lo = std::min(col_[vi].lo, y_[ui]);
        col_[vi].hi = std::max(col_[vi].hi, y_[ui]);
        row_[ui].lo = std::min(row_[ui].lo, i);
        row_[ui].hi = std::max(row_[ui].hi, i);
    }

    placed_.push_back(v);
    ink_ += step.x.best_cost() + step.y.best_cost();
    return step;
}

Layout IncrementalDrawer::layout() const {
    if (placed_count() != g_->vertex_count())
        throw InvalidInput("drawing incomplete: " + std::to_string(placed_count()) + " of " +
                           std::to_string(g_->vertex_count()) + " vertices placed");
    return Layout{x_, y_};
}

Layout draw_in_order(const DirectedGraph& g, std::span<const Vertex> order, const StepCallback& on_step) {
    if (order.size() != static_cast<std::size_t>(g.vertex_count()))
        throw InvalidInput("insertion order must list every vertex exactly once");
    IncrementalDrawer drawer(g);
    for (Vertex v : order) {
        auto step = drawer.add(v);
        if (on_step) on_step(step);
    }
    return drawer.layout();
}

Layout incremental_draw(const DirectedGraph& g, Vertex start, std::optional<std::uint64_t> order_seed,
                        const StepCallback& on_step) {
    const auto order = bfs_order(g, start, order_seed);
    return draw_in_order(g, order, on_step);
}

} // namespace ldraw
