#include "ldraw/graph.hpp"

#include "ldraw/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <random>
#include <unordered_map>

namespace ldraw {

DirectedGraph::DirectedGraph(int n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n < 0) throw InvalidInput("negative vertex count");
    for (const Edge& e : edges_) {
        if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
            throw InvalidInput("edge endpoint out of range: (" + std::to_string(e.src) + ", " +
                               std::to_string(e.dst) + ")");
        if (e.src == e.dst) throw InvalidInput("self-loop on vertex " + std::to_string(e.src));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    if (labels_.empty()) {
        labels_.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) labels_.push_back(std::to_string(v));
    } else if (labels_.size() != static_cast<std::size_t>(n)) {
        throw InvalidInput("label count does not match vertex count");
    }

    const auto un = static_cast<std::size_t>(n);
    out_offsets_.assign(un + 1, 0);
    in_offsets_.assign(un + 1, 0);
    for (const Edge& e : edges_) {
        ++out_offsets_[static_cast<std::size_t>(e.src) + 1];
        ++in_offsets_[static_cast<std::size_t>(e.dst) + 1];
    }
    std::partial_sum(out_offsets_.begin(), out_offsets_.end(), out_offsets_.begin());
    std::partial_sum(in_offsets_.begin(), in_offsets_.end(), in_offsets_.begin());

    // edges_ is sorted by (src, dst), so out-lists come out sorted for free.
    out_targets_.resize(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) out_targets_[i] = edges_[i].dst;

    in_sources_.resize(edges_.size());
    std::vector<std::size_t> cursor(in_offsets_.begin(), in_offsets_.end() - 1);
    for (const Edge& e : edges_) in_sources_[cursor[static_cast<std::size_t>(e.dst)]++] = e.src;
}

void DirectedGraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw InvalidInput("vertex out of range: " + std::to_string(v));
}

std::span<const Vertex> DirectedGraph::out_neighbors(Vertex v) const {
    check_vertex(v);
    const auto i = static_cast<std::size_t>(v);
    return std::span<const Vertex>(out_targets_).subspan(out_offsets_[i], out_offsets_[i + 1] - out_offsets_[i]);
}

std::span<const Vertex> DirectedGraph::in_neighbors(Vertex v) const {
    check_vertex(v);
    const auto i = static_cast<std::size_t>(v);
    return std::span<const Vertex>(in_sources_).subspan(in_offsets_[i], in_offsets_[i + 1] - in_offsets_[i]);
}

std::vector<Vertex> DirectedGraph::undirected_neighbors(Vertex v) const {
    auto outs = out_neighbors(v);
    auto ins = in_neighbors(v);
    std::vector<Vertex> result;
    result.reserve(outs.size() + ins.size());
    std::set_union(outs.begin(), outs.end(), ins.begin(), ins.end(), std::back_inserter(result));
    return result;
}

bool DirectedGraph::has_edge(Vertex u, Vertex v) const {
    auto outs = out_neighbors(u);
    return std::binary_search(outs.begin(), outs.end(), v);
}

const std::string& DirectedGraph::label(Vertex v) const {
    check_vertex(v);
    return labels_[static_cast<std::size_t>(v)];
}

DirectedGraph DirectedGraph::reversed() const {
    std::vector<Edge> flipped;
    flipped.reserve(edges_.size());
    for (const Edge& e : edges_) flipped.push_back({e.dst, e.src});
    return DirectedGraph(n_, std::move(flipped), labels_);
}

DirectedGraph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) edges.push_back({u, v});
    return DirectedGraph(n, std::move(edges));
}

bool is_weakly_connected(const DirectedGraph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        auto visit = [&](Vertex w) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        };
        for (Vertex w : g.out_neighbors(v)) visit(w);
        for (Vertex w : g.in_neighbors(v)) visit(w);
    }
    return reached == n;
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

class LabelTable {
public:
    Vertex intern(const std::string& name) {
        auto [it, inserted] = ids_.try_emplace(name, static_cast<Vertex>(names_.size()));
        if (inserted) names_.push_back(name);
        return it->second;
    }

    DirectedGraph build(std::vector<Edge> edges) {
        const int n = static_cast<int>(names_.size());
        return DirectedGraph(n, std::move(edges), std::move(names_));
    }

private:
    std::unordered_map<std::string, Vertex> ids_;
    std::vector<std::string> names_;
};

std::string_view strip_comment(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    return line;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
}

} // namespace

DirectedGraph parse_edge_list(std::string_view text) {
    LabelTable table;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto tokens = split_ws(strip_comment(line));
        if (tokens.empty()) continue;
        if (tokens.size() > 2)
            throw ParseError(line_no, "expected \"src dst\", got " + std::to_string(tokens.size()) + " tokens");
        Vertex u = table.intern(std::string(tokens[0]));
        if (tokens.size() == 1) continue;
        if (tokens[0] == tokens[1]) throw ParseError(line_no, "self-loop on vertex '" + std::string(tokens[0]) + "'");
        Vertex v = table.intern(std::string(tokens[1]));
        edges.push_back({u, v});
    }
    return table.build(std::move(edges));
}

namespace {

class DotLexer {
public:
    explicit DotLexer(std::string_view text) : text_(text) {}

    struct Token {
        enum Kind { ident, arrow, lbrace, rbrace, semi, end } kind;
        std::string value;
        std::size_t line;
    };

    Token next() {
        skip_space();
        if (pos_ >= text_.size()) return {Token::end, "", line_};
        char c = text_[pos_];
        if (c == '{') return ++pos_, Token{Token::lbrace, "{", line_};
        if (c == '}') return ++pos_, Token{Token::rbrace, "}", line_};
        if (c == ';' || c == ',') return ++pos_, Token{Token::semi, ";", line_};
        if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            pos_ += 2;
            return {Token::arrow, "->", line_};
        }
        if (c == '"') {
            std::size_t start_line = line_;
            std::string value;
            ++pos_;
            while (pos_ < text_.size() && text_[pos_] != '"') {
                if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
                if (text_[pos_] == '\n') ++line_;
                value += text_[pos_++];
            }
            if (pos_ >= text_.size()) throw ParseError(start_line, "unterminated string");
            ++pos_;
            return {Token::ident, value, start_line};
        }
        if (is_ident_char(c)) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
                if (text_[pos_] == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') break;
                ++pos_;
            }
            return {Token::ident, std::string(text_.substr(start, pos_ - start)), line_};
        }
        if (c == '[' || c == '=') throw ParseError(line_, "attributes are not supported");
        throw ParseError(line_, std::string("unexpected character '") + c + "'");
    }

private:
    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '#' || (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/')) {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

} // namespace

DirectedGraph parse_dot(std::string_view text) {
    DotLexer lex(text);
    using Tok = DotLexer::Token;

    Tok t = lex.next();
    if (t.kind != Tok::ident || t.value != "digraph") throw ParseError(t.line, "expected 'digraph'");
    t = lex.next();
    if (t.kind == Tok::ident) t = lex.next();
    if (t.kind != Tok::lbrace) throw ParseError(t.line, "expected '{'");

    LabelTable table;
    std::vector<Edge> edges;
    t = lex.next();
    while (t.kind != Tok::rbrace) {
        if (t.kind == Tok::semi) {
            t = lex.next();
            continue;
        }
        if (t.kind != Tok::ident) throw ParseError(t.line, "expected vertex identifier");
        Vertex prev = table.intern(t.value);
        std::string prev_name = t.value;
        t = lex.next();
        while (t.kind == Tok::arrow) {
            Tok target = lex.next();
            if (target.kind != Tok::ident) throw ParseError(target.line, "expected vertex after '->'");
            if (target.value == prev_name) throw ParseError(target.line, "self-loop on vertex '" + prev_name + "'");
            Vertex cur = table.intern(target.value);
            edges.push_back({prev, cur});
            prev = cur;
            prev_name = target.value;
            t = lex.next();
        }
        if (t.kind == Tok::end) throw ParseError(t.line, "missing closing '}'");
    }
    if (Tok trailing = lex.next(); trailing.kind != Tok::end)
        throw ParseError(trailing.line, "unexpected content after closing '}'");
    return table.build(std::move(edges));
}

DirectedGraph parse_graph(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text.substr(first).starts_with("digraph")) {
        auto rest = text.substr(first + 7);
        if (rest.empty() || !is_ident_char(rest.front())) return parse_dot(text);
    }
    return parse_edge_list(text);
}

std::string to_edge_list(const DirectedGraph& g) {
    std::string out;
    std::vector<char> mentioned(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const Edge& e : g.edges()) {
        mentioned[static_cast<std::size_t>(e.src)] = mentioned[static_cast<std::size_t>(e.dst)] = 1;
    }
    // Isolated vertices first so that first-appearance numbering survives a
    // round-trip whenever ids were assigned that way.
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!mentioned[static_cast<std::size_t>(v)]) out += g.label(v) + "\n";
    }
    for (const Edge& e : g.edges()) out += g.label(e.src) + " " + g.label(e.dst) + "\n";
    return out;
}

namespace {

std::string dot_id(const std::string& s) {
    bool bare = !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
    if (bare) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') quoted += '\\';
        quoted += c;
    }
    return quoted + "\"";
}

} // namespace

std::string to_dot(const DirectedGraph& g) {
    std::string out = "digraph {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) out += "  " + dot_id(g.label(v)) + ";\n";
    for (const Edge& e : g.edges()) out += "  " + dot_id(g.label(e.src)) + " -> " + dot_id(g.label(e.dst)) + ";\n";
    out += "}\n";
    return out;
}

// ---------------------------------------------------------------------------
// Generation and traversal

std::int64_t gnm_edge_count(int n, int density_percent) {
    const std::int64_t nn = n;
    return nn * (nn - 1) * density_percent / 100;
}

DirectedGraph random_connected_gnm(int n, int density_percent, std::uint64_t seed) {
    if (n < 2) throw InvalidInput("random_connected_gnm needs n >= 2");
    if (density_percent < 0 || density_percent > 100) throw InvalidInput("density must be within [0, 100]");
    const std::int64_t m = gnm_edge_count(n, density_percent);
    if (m < n - 1)
        throw InvalidInput("density " + std::to_string(density_percent) + "% gives m=" + std::to_string(m) +
                           " < n-1=" + std::to_string(n - 1) + "; no weakly connected graph exists");

    const std::int64_t slots = static_cast<std::int64_t>(n) * (n - 1);
    std::vector<std::int64_t> pool(static_cast<std::size_t>(slots));
    std::mt19937_64 rng(seed);
    for (;;) {
        std::iota(pool.begin(), pool.end(), 0);
        // Partial Fisher-Yates: the first m slots form a uniform m-subset.
        for (std::int64_t i = 0; i < m; ++i) {
            std::uniform_int_distribution<std::int64_t> pick(i, slots - 1);
            std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(pick(rng))]);
        }
        std::vector<Edge> edges;
        edges.reserve(static_cast<std::size_t>(m));
        for (std::int64_t i = 0; i < m; ++i) {
            const std::int64_t slot = pool[static_cast<std::size_t>(i)];
            const int u = static_cast<int>(slot / (n - 1));
            int v = static_cast<int>(slot % (n - 1));
            if (v >= u) ++v; // skip the diagonal
            edges.push_back({u, v});
        }
        DirectedGraph g(n, std::move(edges));
        if (is_weakly_connected(g)) return g;
    }
}

std::vector<Vertex> bfs_order(const DirectedGraph& g, Vertex start, std::optional<std::uint64_t> shuffle_seed) {
    const int n = g.vertex_count();
    if (n == 0) return {};
    if (start < 0 || start >= n) throw InvalidInput("BFS start vertex out of range: " + std::to_string(start));
    if (!is_weakly_connected(g)) throw InvalidInput("graph is not weakly connected");

    std::optional<std::mt19937_64> rng;
    if (shuffle_seed) rng.emplace(*shuffle_seed);

    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    std::queue<Vertex> frontier;
    frontier.push(start);
    seen[static_cast<std::size_t>(start)] = 1;
    while (!frontier.empty()) {
        Vertex v = frontier.front();
        frontier.pop();
        order.push_back(v);
        std::vector<Vertex> nbrs = g.undirected_neighbors(v);
        if (rng) std::shuffle(nbrs.begin(), nbrs.end(), *rng);
        for (Vertex w : nbrs) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                frontier.push(w);
            }
        }
    }
    return order;
}

} // namespace ldraw
