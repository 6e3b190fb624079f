#include "ldraw/reduction.hpp"

#include "ldraw/error.hpp"

#include <algorithm>

namespace ldraw {

namespace {

void check_arrangement(const DirectedGraph& g, std::span<const int> positions) {
    if (positions.size() != static_cast<std::size_t>(g.vertex_count()) || !is_permutation_of_positions(positions))
        throw InvalidInput("arrangement must be a permutation of 1..n");
}

int pos_of(std::span<const int> positions, Vertex v) { return positions[static_cast<std::size_t>(v)]; }

} // namespace

std::int64_t profile_cost(const DirectedGraph& g, std::span<const int> positions) {
    check_arrangement(g, positions);
    std::int64_t total = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        int lowest = pos_of(positions, u);
        for (Vertex w : g.undirected_neighbors(u)) lowest = std::min(lowest, pos_of(positions, w));
        total += pos_of(positions, u) - lowest;
    }
    return total;
}

std::int64_t sumcut_cost(const DirectedGraph& g, std::span<const int> positions) {
    check_arrangement(g, positions);
    // u is counted at every cut i with pos[u] <= i < max pos over its out-neighbors.
    std::int64_t total = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        int furthest = pos_of(positions, u);
        for (Vertex w : g.out_neighbors(u)) furthest = std::max(furthest, pos_of(positions, w));
        total += furthest - pos_of(positions, u);
    }
    return total;
}

std::int64_t gadget_clique_size(std::int64_t n) { return (5 * n * n + 9 * n) / 2 + 1; }

std::int64_t gadget_ink_budget(std::int64_t n, std::int64_t k) {
    const std::int64_t p = gadget_clique_size(n);
    return k + 4 * p * (p - 1) + (3 * n * n + 9 * n) / 2;
}

ReductionInstance build_mild_instance(const DirectedGraph& base, std::int64_t k) {
    const int n = base.vertex_count();
    if (n < 1) throw InvalidInput("base graph must have at least one vertex");
    for (const Edge& e : base.edges()) {
        if (!base.has_edge(e.dst, e.src))
            throw InvalidInput("base graph must be symmetric; missing (" + base.label(e.dst) + ", " +
                               base.label(e.src) + ")");
    }

    ReductionInstance inst;
    inst.base_vertices = n;
    inst.p = gadget_clique_size(n);
    inst.k = k;
    inst.k_prime = gadget_ink_budget(n, k);
    const auto p = static_cast<Vertex>(inst.p);
    inst.anchor1 = 0;
    inst.anchor2 = p;

    const std::size_t clique_edges = static_cast<std::size_t>(p) * static_cast<std::size_t>(p - 1);
    std::vector<Edge> edges;
    edges.reserve(2 * clique_edges + 3 * static_cast<std::size_t>(n) + base.edge_count());
    for (Vertex offset : {Vertex{0}, p}) {
        for (Vertex a = 0; a < p; ++a)
            for (Vertex b = 0; b < p; ++b)
                if (a != b) edges.push_back({offset + a, offset + b});
    }
    for (Vertex v = 0; v < n; ++v) {
        const Vertex uv = inst.gadget_vertex(v);
        edges.push_back({uv, inst.anchor1});
        edges.push_back({uv, inst.anchor2});
        edges.push_back({inst.anchor2, uv});
    }
    for (const Edge& e : base.edges()) {
        edges.push_back({inst.gadget_vertex(e.src), inst.gadget_vertex(e.dst)});
        edges.push_back({inst.gadget_vertex(e.dst), inst.gadget_vertex(e.src)});
    }

    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(2 * p + n));
    for (Vertex a = 0; a < p; ++a) labels.push_back("K1_" + std::to_string(a));
    for (Vertex a = 0; a < p; ++a) labels.push_back("K2_" + std::to_string(a));
    for (Vertex v = 0; v < n; ++v) labels.push_back("u_" + base.label(v));

    inst.graph = DirectedGraph(2 * p + n, std::move(edges), std::move(labels));
    return inst;
}

Layout witness_layout(const ReductionInstance& inst, std::span<const int> profile_positions) {
    const auto n = static_cast<int>(inst.base_vertices);
    const auto p = static_cast<int>(inst.p);
    if (profile_positions.size() != static_cast<std::size_t>(n) || !is_permutation_of_positions(profile_positions))
        throw InvalidInput("profile arrangement must be a permutation of 1..n");

    const auto total = static_cast<std::size_t>(2 * p + n);
    Layout l{std::vector<int>(total), std::vector<int>(total)};
    // Clique one occupies columns/rows 1..p; anchor1 (local index 0) takes the
    // last slot on both axes, the others shift down by one.
    for (int a = 0; a < p; ++a) {
        const int slot = a == 0 ? p : a;
        l.xs[static_cast<std::size_t>(a)] = slot;
        l.ys[static_cast<std::size_t>(a)] = slot;
    }
    // Clique two occupies p+n+1..2p+n with anchor2 first on both axes.
    for (int a = 0; a < p; ++a) {
        const int slot = p + n + 1 + a;
        l.xs[static_cast<std::size_t>(p + a)] = slot;
        l.ys[static_cast<std::size_t>(p + a)] = slot;
    }
    for (int v = 0; v < n; ++v) {
        const auto uv = static_cast<std::size_t>(inst.gadget_vertex(v));
        l.xs[uv] = p + profile_positions[static_cast<std::size_t>(v)];
        l.ys[uv] = p + 1 + v;
    }
    return l;
}

std::string instance_to_text(const ReductionInstance& inst) {
    std::string out;
    out += "# reduction instance\n";
    out += "# base_vertices " + std::to_string(inst.base_vertices) + "\n";
    out += "# p " + std::to_string(inst.p) + "\n";
    out += "# k " + std::to_string(inst.k) + "\n";
    out += "# k_prime " + std::to_string(inst.k_prime) + "\n";
    out += "# anchor1 " + inst.graph.label(inst.anchor1) + "\n";
    out += "# anchor2 " + inst.graph.label(inst.anchor2) + "\n";
    out += to_edge_list(inst.graph);
    return out;
}

} // namespace ldraw
