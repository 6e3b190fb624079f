#include "ldraw/error.hpp"
#include "ldraw/exact.hpp"
#include "ldraw/incremental.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ldraw;

TEST(AxisObjective, GroupsFollowEdgeDirection) {
    DirectedGraph g(3, {{0, 1}, {2, 1}});
    const AxisObjective ox(g, Axis::x);
    const AxisObjective oy(g, Axis::y);
    EXPECT_EQ(std::vector<Vertex>(ox.group(1).begin(), ox.group(1).end()), (std::vector<Vertex>{0, 1, 2}));
    EXPECT_EQ(std::vector<Vertex>(ox.group(0).begin(), ox.group(0).end()), (std::vector<Vertex>{0}));
    EXPECT_EQ(std::vector<Vertex>(oy.group(0).begin(), oy.group(0).end()), (std::vector<Vertex>{0, 1}));
    EXPECT_EQ(std::vector<Vertex>(oy.group(2).begin(), oy.group(2).end()), (std::vector<Vertex>{1, 2}));
}

TEST(AxisObjective, EqualsAxisInk) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const DirectedGraph g = check::random_digraph(n, 0.3, rng);
        const auto perm = check::random_permutation(n, rng);
        EXPECT_EQ(AxisObjective(g, Axis::x).evaluate(perm), horizontal_ink(g, perm));
        EXPECT_EQ(AxisObjective(g, Axis::y).evaluate(perm), vertical_ink(g, perm));
    }
}

TEST(ExactAxis, CompleteGraph) {
    for (int n = 1; n <= 9; ++n) {
        const DirectedGraph k = complete_graph(n);
        for (ExactMethod m : {ExactMethod::branch_and_bound, ExactMethod::subset_dp}) {
            EXPECT_EQ(exact_axis(AxisObjective(k, Axis::x), m).value, n * (n - 1));
            EXPECT_EQ(exact_axis(AxisObjective(k, Axis::y), m).value, n * (n - 1));
        }
    }
}

TEST(ExactAxis, DirectedPath) {
    for (int n = 2; n <= 12; ++n) {
        std::vector<Edge> edges;
        for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
        const DirectedGraph path(n, edges);
        EXPECT_EQ(exact_axis(AxisObjective(path, Axis::x), ExactMethod::subset_dp).value, n - 1);
        EXPECT_EQ(exact_layout(path).ink.ink, 2 * (n - 1));
    }
}

TEST(ExactAxis, SingleEdge) {
    DirectedGraph g(2, {{0, 1}});
    const ExactResult r = exact_layout(g, ExactMethod::branch_and_bound);
    EXPECT_EQ(r.ink.ink, 2);
    EXPECT_EQ(r.layout, Layout::diagonal(2)); // lexicographically first optimum
}

TEST(ExactAxis, AgreesWithBruteForce) {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const DirectedGraph g = check::random_digraph(n, 0.1 + 0.1 * static_cast<double>(rng() % 5), rng);
        for (Axis axis : {Axis::x, Axis::y}) {
            const AxisObjective obj(g, axis);
            const auto bnb = exact_axis(obj, ExactMethod::branch_and_bound);
            const auto dp = exact_axis(obj, ExactMethod::subset_dp);
            const auto brute = check::brute_force_axis(g, axis);
            ASSERT_EQ(bnb.value, brute);
            ASSERT_EQ(dp.value, brute);
            ASSERT_EQ(obj.evaluate(dp.positions), dp.value);
            ASSERT_EQ(obj.evaluate(bnb.positions), bnb.value);
            ASSERT_TRUE(is_permutation_of_positions(dp.positions));
            EXPECT_EQ(bnb.positions, dp.positions); // same tie-breaking
        }
    }
}

TEST(ExactAxis, MethodsAgreeOnNine) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 6; ++trial) {
        const DirectedGraph g = check::random_digraph(9, 0.25, rng);
        const AxisObjective obj(g, Axis::x);
        EXPECT_EQ(exact_axis(obj, ExactMethod::branch_and_bound).value, exact_axis(obj, ExactMethod::subset_dp).value);
    }
}

TEST(ExactAxis, ReversalSwapsAxes) {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 8);
        const DirectedGraph g = check::random_digraph(n, 0.3, rng);
        EXPECT_EQ(exact_axis(AxisObjective(g, Axis::x), ExactMethod::subset_dp).value,
                  exact_axis(AxisObjective(g.reversed(), Axis::y), ExactMethod::subset_dp).value);
    }
}

TEST(ExactAxis, SizeGuards) {
    const DirectedGraph big(12, {{0, 1}});
    EXPECT_THROW(exact_axis(AxisObjective(big, Axis::x), ExactMethod::branch_and_bound), SizeGuardExceeded);
    EXPECT_NO_THROW(exact_axis(AxisObjective(big, Axis::x), ExactMethod::subset_dp));
    EXPECT_THROW(exact_layout(big, ExactMethod::subset_dp, ExactLimits{11, 10}), SizeGuardExceeded);
    const DirectedGraph huge(23, {{0, 1}});
    EXPECT_THROW(exact_layout(huge), SizeGuardExceeded);
    // raising the limit cannot go past the hard cap
    EXPECT_THROW(exact_layout(DirectedGraph(29, {{0, 1}}), ExactMethod::subset_dp, ExactLimits{11, 40}),
                 SizeGuardExceeded);
}

TEST(ExactLayout, NeverWorseThanIncremental) {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const DirectedGraph g = random_connected_gnm(n, 50 + static_cast<int>(rng() % 40), rng());
        const ExactResult ex = exact_layout(g);
        const Layout inc = incremental_draw(g, 0, rng());
        EXPECT_LE(ex.ink.ink, compute_ink(g, inc).ink);
        EXPECT_EQ(ex.ink.ink, compute_ink(g, ex.layout).ink);
        EXPECT_EQ(ex.ink.ink, ex.ink.ink_x + ex.ink.ink_y);
    }
}

TEST(ExactLayout, FifteenVertexInstance) {
    if (gnm_edge_count(15, 10) < 14) GTEST_SKIP() << "density too low for a connected instance";
    const DirectedGraph g = random_connected_gnm(15, 10, 7);
    const ExactResult ex = exact_layout(g);
    EXPECT_EQ(ex.ink.ink, compute_ink(g, ex.layout).ink);
    EXPECT_LE(ex.ink.ink, compute_ink(g, incremental_draw(g, 0, 1)).ink);
    // Every vertex with an edge pays at least one unit on one axis.
    EXPECT_GE(ex.ink.ink, g.edge_count() > 0 ? 2 : 0);
}
