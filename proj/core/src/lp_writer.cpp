#include "ldraw/exact.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace ldraw {

namespace {

constexpr std::size_t kTermsPerLine = 8;

struct AxisNames {
    char coord;       // x | y
    const char* high; // E | N
    const char* low;  // W | S
};

AxisNames names_for(Axis axis) { return axis == Axis::x ? AxisNames{'x', "E", "W"} : AxisNames{'y', "N", "S"}; }

std::string var(char prefix, int i, int j) {
    return std::string(1, prefix) + "_" + std::to_string(i) + "_" + std::to_string(j);
}

std::string var(const char* prefix, int i) { return std::string(prefix) + "_" + std::to_string(i); }

// Writes "name: t1 + t2 ... <op> rhs", wrapping long rows.
class RowWriter {
public:
    explicit RowWriter(std::ostringstream& out) : out_(out) {}

    void begin(const std::string& name) {
        out_ << " " << name << ":";
        terms_ = 0;
    }

    void term(long long coef, const std::string& name) {
        if (terms_ > 0 && terms_ % kTermsPerLine == 0) out_ << "\n   ";
        if (terms_ == 0) {
            if (coef < 0) out_ << " -";
        } else {
            out_ << (coef < 0 ? " -" : " +");
        }
        const long long mag = coef < 0 ? -coef : coef;
        out_ << " ";
        if (mag != 1) out_ << mag << " ";
        out_ << name;
        ++terms_;
    }

    void end(const char* op, long long rhs) { out_ << " " << op << " " << rhs << "\n"; }

private:
    std::ostringstream& out_;
    std::size_t terms_ = 0;
};

void write_name_list(std::ostringstream& out, const std::vector<std::string>& names) {
    for (std::size_t k = 0; k < names.size(); ++k) {
        out << " " << names[k];
        if ((k + 1) % kTermsPerLine == 0 || k + 1 == names.size()) out << "\n";
    }
}

} // namespace

std::string emit_lp(const DirectedGraph& g, Axis axis) {
    const int n = g.vertex_count();
    const AxisNames nm = names_for(axis);
    std::ostringstream out;
    RowWriter row(out);

    // coordinate of vertex i expanded as sum_j j * c_i_j
    auto coordinate_terms = [&](int i, long long sign) {
        for (int j = 1; j <= n; ++j) row.term(sign * j, var(nm.coord, i, j));
    };

    out << "\\ Minimum-ink L-drawing, " << nm.coord << "-axis: " << n << " vertices, " << g.edge_count()
        << " edges\n";
    out << "Minimize\n";
    row.begin("ink");
    if (n == 0) {
        out << " 0\n";
    } else {
        for (int i = 1; i <= n; ++i) {
            row.term(1, var(nm.high, i));
            row.term(-1, var(nm.low, i));
        }
        out << "\n";
    }

    out << "Subject To\n";
    for (int i = 1; i <= n; ++i) {
        row.begin("assign_" + std::to_string(i));
        for (int j = 1; j <= n; ++j) row.term(1, var(nm.coord, i, j));
        row.end("=", 1);
    }
    for (int j = 1; j <= n; ++j) {
        row.begin("capacity_" + std::to_string(j));
        for (int i = 1; i <= n; ++i) row.term(1, var(nm.coord, i, j));
        row.end("<=", 1);
    }
    for (int i = 1; i <= n; ++i) {
        row.begin(std::string("own_") + nm.high + "_" + std::to_string(i));
        row.term(1, var(nm.high, i));
        coordinate_terms(i, -1);
        row.end(">=", 0);
        row.begin(std::string("own_") + nm.low + "_" + std::to_string(i));
        row.term(1, var(nm.low, i));
        coordinate_terms(i, -1);
        row.end("<=", 0);
    }
    // x-axis: edge (v_i, v_j) puts a bend at x_i on v_j's row.
    // y-axis: edge (v_i, v_j) puts a bend at y_j on v_i's column.
    for (const Edge& e : g.edges()) {
        const int i = e.src + 1;
        const int j = e.dst + 1;
        const int owner = axis == Axis::x ? j : i;
        const int reached = axis == Axis::x ? i : j;
        const std::string suffix = std::to_string(i) + "_" + std::to_string(j);
        row.begin(std::string("edge_") + nm.high + "_" + suffix);
        row.term(1, var(nm.high, owner));
        coordinate_terms(reached, -1);
        row.end(">=", 0);
        row.begin(std::string("edge_") + nm.low + "_" + suffix);
        row.term(1, var(nm.low, owner));
        coordinate_terms(reached, -1);
        row.end("<=", 0);
    }

    out << "Bounds\n";
    for (int i = 1; i <= n; ++i) {
        out << " 1 <= " << var(nm.high, i) << " <= " << n << "\n";
        out << " 1 <= " << var(nm.low, i) << " <= " << n << "\n";
    }

    std::vector<std::string> binaries, generals;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) binaries.push_back(var(nm.coord, i, j));
        generals.push_back(var(nm.high, i));
        generals.push_back(var(nm.low, i));
    }
    out << "Binaries\n";
    write_name_list(out, binaries);
    out << "Generals\n";
    write_name_list(out, generals);
    out << "End\n";
    return out.str();
}

} // namespace ldraw
