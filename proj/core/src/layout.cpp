#include "ldraw/layout.hpp"

#include "ldraw/error.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

namespace ldraw {

Layout Layout::diagonal(int n) {
    Layout l;
    for (int v = 0; v < n; ++v) {
        l.xs.push_back(v + 1);
        l.ys.push_back(v + 1);
    }
    return l;
}

bool is_permutation_of_positions(std::span<const int> coords) {
    const auto n = coords.size();
    std::vector<char> used(n + 1, 0);
    for (int c : coords) {
        if (c < 1 || static_cast<std::size_t>(c) > n || used[static_cast<std::size_t>(c)]) return false;
        used[static_cast<std::size_t>(c)] = 1;
    }
    return true;
}

void validate_layout(const Layout& layout, int n) {
    if (layout.xs.size() != static_cast<std::size_t>(n) || layout.ys.size() != static_cast<std::size_t>(n))
        throw InvalidInput("layout size " + std::to_string(layout.xs.size()) + "x" + std::to_string(layout.ys.size()) +
                           " does not match vertex count " + std::to_string(n));
    if (!is_permutation_of_positions(layout.xs)) throw InvalidInput("x-coordinates are not a permutation of 1..n");
    if (!is_permutation_of_positions(layout.ys)) throw InvalidInput("y-coordinates are not a permutation of 1..n");
}

namespace {

void check_injective(const DirectedGraph& g, std::span<const int> coords, const char* axis) {
    if (coords.size() != static_cast<std::size_t>(g.vertex_count()))
        throw InvalidInput(std::string(axis) + "-coordinate count does not match vertex count");
    std::unordered_set<int> seen;
    seen.reserve(coords.size());
    for (int c : coords) {
        if (!seen.insert(c).second)
            throw InvalidInput(std::string(axis) + "-coordinate " + std::to_string(c) + " is shared by two vertices");
    }
}

// [min, max] of own coordinate together with the coordinates of `others`.
Interval span_with(int own, std::span<const Vertex> others, std::span<const int> coords) {
    Interval iv{own, own};
    for (Vertex w : others) {
        int c = coords[static_cast<std::size_t>(w)];
        iv.lo = std::min(iv.lo, c);
        iv.hi = std::max(iv.hi, c);
    }
    return iv;
}

std::vector<Interval> row_extents(const DirectedGraph& g, std::span<const int> xs) {
    std::vector<Interval> row(xs.size());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        row[static_cast<std::size_t>(v)] = span_with(xs[static_cast<std::size_t>(v)], g.in_neighbors(v), xs);
    return row;
}

std::vector<Interval> col_extents(const DirectedGraph& g, std::span<const int> ys) {
    std::vector<Interval> col(ys.size());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        col[static_cast<std::size_t>(v)] = span_with(ys[static_cast<std::size_t>(v)], g.out_neighbors(v), ys);
    return col;
}

} // namespace

Extents compute_extents(const DirectedGraph& g, std::span<const int> xs, std::span<const int> ys) {
    check_injective(g, xs, "x");
    check_injective(g, ys, "y");
    return {row_extents(g, xs), col_extents(g, ys)};
}

Extents compute_extents(const DirectedGraph& g, const Layout& layout) {
    validate_layout(layout, g.vertex_count());
    return {row_extents(g, layout.xs), col_extents(g, layout.ys)};
}

namespace {

InkBreakdown ink_from_extents(std::span<const int> xs, std::span<const int> ys, const Extents& ext) {
    InkBreakdown ink;
    ink.per_vertex.resize(xs.size());
    for (std::size_t v = 0; v < xs.size(); ++v) {
        DirectionalInk& d = ink.per_vertex[v];
        d.east = ext.row[v].hi - xs[v];
        d.west = xs[v] - ext.row[v].lo;
        d.north = ext.col[v].hi - ys[v];
        d.south = ys[v] - ext.col[v].lo;
        ink.ink_x += d.east + d.west;
        ink.ink_y += d.north + d.south;
    }
    ink.ink = ink.ink_x + ink.ink_y;
    return ink;
}

} // namespace

InkBreakdown compute_ink(const DirectedGraph& g, std::span<const int> xs, std::span<const int> ys) {
    return ink_from_extents(xs, ys, compute_extents(g, xs, ys));
}

InkBreakdown compute_ink(const DirectedGraph& g, const Layout& layout) {
    return ink_from_extents(layout.xs, layout.ys, compute_extents(g, layout));
}

std::int64_t horizontal_ink(const DirectedGraph& g, std::span<const int> xs) {
    check_injective(g, xs, "x");
    std::int64_t total = 0;
    for (const Interval& iv : row_extents(g, xs)) total += iv.length();
    return total;
}

std::int64_t vertical_ink(const DirectedGraph& g, std::span<const int> ys) {
    check_injective(g, ys, "y");
    std::int64_t total = 0;
    for (const Interval& iv : col_extents(g, ys)) total += iv.length();
    return total;
}

std::int64_t spread_ink_formula(std::int64_t n, std::int64_t h, std::int64_t k) {
    return 2 * n * (n - 1) + n * (h + k);
}

// ---------------------------------------------------------------------------

std::string layout_to_text(const DirectedGraph& g, const Layout& layout) {
    validate_layout(layout, g.vertex_count());
    std::string out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out += g.label(v) + " " + std::to_string(layout.xs[static_cast<std::size_t>(v)]) + " " +
               std::to_string(layout.ys[static_cast<std::size_t>(v)]) + "\n";
    }
    return out;
}

namespace {

bool parse_int(std::string_view s, int& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

} // namespace

Layout parse_layout_text(const DirectedGraph& g, std::string_view text) {
    std::unordered_map<std::string, Vertex> by_label;
    for (Vertex v = 0; v < g.vertex_count(); ++v) by_label.emplace(g.label(v), v);

    const auto n = static_cast<std::size_t>(g.vertex_count());
    Layout layout{std::vector<int>(n, 0), std::vector<int>(n, 0)};
    std::vector<char> assigned(n, 0);

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::vector<std::string_view> tok;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) tok.push_back(line.substr(i, j - i));
            i = j;
        }
        if (tok.empty()) continue;
        if (tok.size() != 3) throw ParseError(line_no, "expected \"vertex x y\"");
        auto it = by_label.find(std::string(tok[0]));
        if (it == by_label.end()) throw ParseError(line_no, "unknown vertex '" + std::string(tok[0]) + "'");
        const auto v = static_cast<std::size_t>(it->second);
        if (assigned[v]) throw ParseError(line_no, "vertex '" + std::string(tok[0]) + "' placed twice");
        if (!parse_int(tok[1], layout.xs[v]) || !parse_int(tok[2], layout.ys[v]))
            throw ParseError(line_no, "coordinates must be integers");
        assigned[v] = 1;
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (!assigned[v]) throw InvalidInput("vertex '" + g.label(static_cast<Vertex>(v)) + "' has no position");
    }
    validate_layout(layout, g.vertex_count());
    return layout;
}

} // namespace ldraw
