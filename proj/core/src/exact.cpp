#include "ldraw/exact.hpp"

#include "ldraw/error.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

namespace ldraw {

AxisObjective::AxisObjective(const DirectedGraph& g, Axis axis) : axis_(axis) {
    groups_.resize(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto nbrs = axis == Axis::x ? g.in_neighbors(v) : g.out_neighbors(v);
        auto& grp = groups_[static_cast<std::size_t>(v)];
        grp.assign(nbrs.begin(), nbrs.end());
        grp.insert(std::lower_bound(grp.begin(), grp.end(), v), v);
    }
}

std::int64_t AxisObjective::evaluate(std::span<const int> positions) const {
    if (positions.size() != groups_.size()) throw InvalidInput("position count does not match vertex count");
    std::int64_t total = 0;
    for (const auto& grp : groups_) {
        int lo = std::numeric_limits<int>::max();
        int hi = std::numeric_limits<int>::min();
        for (Vertex u : grp) {
            lo = std::min(lo, positions[static_cast<std::size_t>(u)]);
            hi = std::max(hi, positions[static_cast<std::size_t>(u)]);
        }
        total += hi - lo;
    }
    return total;
}

namespace {

std::vector<int> positions_from_sequence(std::span<const Vertex> sequence) {
    std::vector<int> pos(sequence.size());
    for (std::size_t i = 0; i < sequence.size(); ++i) pos[static_cast<std::size_t>(sequence[i])] = static_cast<int>(i) + 1;
    return pos;
}

// Held-Karp style recurrence over prefix sets. Placing a prefix set P in the
// first |P| positions, every group that meets both P and its complement
// straddles the boundary after position |P| and pays one unit there. The
// objective is the sum of these boundary counts, so
//   rest(P) = cut(P) + min_{u not in P} rest(P + u),   rest(V) = 0.
AxisSolution solve_subset_dp(const AxisObjective& obj) {
    const int n = obj.size();
    if (n == 0) return {};
    const std::uint32_t full = n == 32 ? ~0U : ((1U << n) - 1);
    std::vector<std::uint32_t> masks(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : obj.group(v)) masks[static_cast<std::size_t>(v)] |= 1U << u;

    auto cut = [&](std::uint32_t set) {
        int c = 0;
        for (std::uint32_t m : masks) c += (m & set) != 0 && (m & ~set) != 0;
        return c;
    };

    const std::size_t states = std::size_t{1} << n;
    std::vector<std::int32_t> rest(states, 0);
    for (std::size_t s = states - 1; s-- > 0;) {
        const auto set = static_cast<std::uint32_t>(s);
        std::int32_t best = std::numeric_limits<std::int32_t>::max();
        for (std::uint32_t free = full & ~set; free; free &= free - 1) {
            const std::uint32_t bit = free & (~free + 1);
            best = std::min(best, rest[set | bit]);
        }
        rest[s] = best + cut(set);
    }

    std::vector<Vertex> sequence;
    sequence.reserve(static_cast<std::size_t>(n));
    std::uint32_t set = 0;
    while (set != full) {
        const std::int32_t need = rest[set] - cut(set);
        for (Vertex u = 0; u < n; ++u) {
            const std::uint32_t bit = 1U << u;
            if (!(set & bit) && rest[set | bit] == need) {
                sequence.push_back(u);
                set |= bit;
                break;
            }
        }
    }
    return {positions_from_sequence(sequence), rest[0]};
}

// Depth-first enumeration filling positions left to right. Lower bound at a
// node with t positions filled:
//   closed groups    exact span,
//   open groups      (t + remaining members) - first position,
//   untouched groups |S| - 1.
class BranchAndBound {
public:
    explicit BranchAndBound(const AxisObjective& obj) : obj_(obj), n_(obj.size()) {
        const auto un = static_cast<std::size_t>(n_);
        member_of_.resize(un);
        group_size_.resize(un);
        for (Vertex v = 0; v < n_; ++v) {
            group_size_[static_cast<std::size_t>(v)] = static_cast<int>(obj.group(v).size());
            for (Vertex u : obj.group(v)) member_of_[static_cast<std::size_t>(u)].push_back(v);
        }
        placed_in_group_.assign(un, 0);
        first_pos_.assign(un, 0);
        used_.assign(un, 0);
    }

    AxisSolution solve() {
        if (n_ == 0) return {};
        std::vector<Vertex> identity(static_cast<std::size_t>(n_));
        std::iota(identity.begin(), identity.end(), 0);
        best_sequence_ = identity;
        // One above a feasible value so the lexicographically first optimum is
        // still accepted when the identity is itself optimal.
        best_value_ = obj_.evaluate(positions_from_sequence(identity)) + 1;

        State root;
        for (int s : group_size_) root.untouched += s - 1;
        sequence_.clear();
        dfs(root);
        return {positions_from_sequence(best_sequence_), best_value_};
    }

private:
    struct State {
        std::int64_t closed = 0;
        std::int64_t untouched = 0;
        std::int64_t open_count = 0;
        std::int64_t open_first_sum = 0;
        std::int64_t open_remaining_sum = 0;

        std::int64_t bound(std::int64_t t) const {
            return closed + untouched + open_count * t + open_remaining_sum - open_first_sum;
        }
    };

    void dfs(const State& state) {
        const auto t = static_cast<std::int64_t>(sequence_.size());
        if (t == n_) {
            if (state.closed < best_value_) {
                best_value_ = state.closed;
                best_sequence_ = sequence_;
            }
            return;
        }
        const int pos = static_cast<int>(t) + 1;
        for (Vertex v = 0; v < n_; ++v) {
            if (used_[static_cast<std::size_t>(v)]) continue;
            State next = state;
            for (Vertex g : member_of_[static_cast<std::size_t>(v)]) {
                const auto gi = static_cast<std::size_t>(g);
                const int size = group_size_[gi];
                int& placed = placed_in_group_[gi];
                if (placed == 0) {
                    next.untouched -= size - 1;
                    first_pos_[gi] = pos;
                    if (size > 1) {
                        ++next.open_count;
                        next.open_first_sum += pos;
                        next.open_remaining_sum += size - 1;
                    }
                } else {
                    --next.open_remaining_sum;
                    if (placed + 1 == size) {
                        --next.open_count;
                        next.open_first_sum -= first_pos_[gi];
                        next.closed += pos - first_pos_[gi];
                    }
                }
                ++placed;
            }
            used_[static_cast<std::size_t>(v)] = 1;
            sequence_.push_back(v);
            if (next.bound(t + 1) < best_value_) dfs(next);
            sequence_.pop_back();
            used_[static_cast<std::size_t>(v)] = 0;
            for (Vertex g : member_of_[static_cast<std::size_t>(v)]) --placed_in_group_[static_cast<std::size_t>(g)];
        }
    }

    const AxisObjective& obj_;
    int n_;
    std::vector<std::vector<Vertex>> member_of_;
    std::vector<int> group_size_;
    std::vector<int> placed_in_group_;
    std::vector<int> first_pos_;
    std::vector<char> used_;
    std::vector<Vertex> sequence_;
    std::vector<Vertex> best_sequence_;
    std::int64_t best_value_ = 0;
};

constexpr int kSubsetDpHardLimit = 28;

} // namespace

AxisSolution exact_axis(const AxisObjective& objective, ExactMethod method, ExactLimits limits) {
    const int n = objective.size();
    switch (method) {
    case ExactMethod::branch_and_bound:
        if (n > limits.max_branch_and_bound)
            throw SizeGuardExceeded("branch-and-bound limited to n <= " + std::to_string(limits.max_branch_and_bound) +
                                    ", got n = " + std::to_string(n));
        return BranchAndBound(objective).solve();
    case ExactMethod::subset_dp:
        if (n > std::min(limits.max_subset_dp, kSubsetDpHardLimit))
            throw SizeGuardExceeded("subset DP limited to n <= " +
                                    std::to_string(std::min(limits.max_subset_dp, kSubsetDpHardLimit)) +
                                    ", got n = " + std::to_string(n));
        return solve_subset_dp(objective);
    }
    throw InvalidInput("unknown exact method");
}

ExactResult exact_layout(const DirectedGraph& g, ExactMethod method, ExactLimits limits) {
    AxisSolution sx = exact_axis(AxisObjective(g, Axis::x), method, limits);
    AxisSolution sy = exact_axis(AxisObjective(g, Axis::y), method, limits);
    ExactResult result;
    result.layout = Layout{std::move(sx.positions), std::move(sy.positions)};
    result.ink = compute_ink(g, result.layout);
    return result;
}

} // namespace ldraw
