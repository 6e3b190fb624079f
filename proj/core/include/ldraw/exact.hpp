#pragma once

#include "ldraw/graph.hpp"
#include "ldraw/layout.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ldraw {

/// One axis of the minimum-ink problem as a linear arrangement objective.
///
/// Each vertex v owns a group S(v): {v} plus its in-neighbors on the x-axis,
/// {v} plus its out-neighbors on the y-axis. The cost of a position
/// assignment is the sum over v of (max - min) position within S(v), which is
/// exactly the ink on that axis.
class AxisObjective {
public:
    AxisObjective(const DirectedGraph& g, Axis axis);

    Axis axis() const noexcept { return axis_; }
    int size() const noexcept { return static_cast<int>(groups_.size()); }

    /// S(v), sorted.
    std::span<const Vertex> group(Vertex v) const { return groups_.at(static_cast<std::size_t>(v)); }

    /// Objective value of `positions` (positions[v] = coordinate of v; any injective values).
    std::int64_t evaluate(std::span<const int> positions) const;

private:
    Axis axis_;
    std::vector<std::vector<Vertex>> groups_;
};

enum class ExactMethod { branch_and_bound, subset_dp };

struct ExactLimits {
    int max_branch_and_bound = 11;
    int max_subset_dp = 22;
};

struct AxisSolution {
    std::vector<int> positions; ///< positions[v] in 1..n
    std::int64_t value = 0;
};

/// Minimizes the axis objective exactly. Among optimal arrangements the one
/// whose vertex sequence (left to right) is lexicographically smallest is
/// returned. Throws SizeGuardExceeded when n exceeds the limit for `method`.
AxisSolution exact_axis(const AxisObjective& objective, ExactMethod method, ExactLimits limits = {});

struct ExactResult {
    Layout layout;
    InkBreakdown ink;
};

/// Minimum-ink layout: the two axes are optimized independently.
ExactResult exact_layout(const DirectedGraph& g, ExactMethod method = ExactMethod::subset_dp, ExactLimits limits = {});

/// The integer program for one axis in CPLEX LP text format.
///
/// x-axis: binaries x_i_j (vertex i at column j), integers E_i and W_i.
/// y-axis: binaries y_i_j, integers N_i and S_i. Vertex and position indices
/// are 1-based. Rows are emitted in a fixed order: assignment, capacity,
/// own-coordinate bounds, then two rows per edge.
std::string emit_lp(const DirectedGraph& g, Axis axis);

} // namespace ldraw
