#include "cli.hpp"
#include "ldraw/graph.hpp"
#include "ldraw/layout.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

using namespace ldraw;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "ldraw");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("ldraw_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string file(const std::string& name, const std::string& content) {
        const fs::path p = dir_ / name;
        std::ofstream(p) << content;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    static std::string slurp(const std::string& p) {
        std::ifstream in(p);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    fs::path dir_;
};

} // namespace

TEST_F(CliTest, InkOfCompleteGraph) {
    const std::string g = file("k5.txt", to_edge_list(complete_graph(5)));
    const std::string l = file("k5.layout", layout_to_text(complete_graph(5), Layout{{3, 1, 5, 2, 4}, {1, 2, 3, 4, 5}}));
    const Result r = invoke({"ink", g, l});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "40\n");
    const Result j = invoke({"--format", "json", "ink", g, l});
    EXPECT_EQ(j.out, "{\"ink\":40,\"ink_x\":20,\"ink_y\":20}\n");
}

TEST_F(CliTest, LayoutRoundTripsThroughInk) {
    const std::string g = file("g.txt", to_edge_list(random_connected_gnm(12, 20, 3)));
    const Result lay = invoke({"--seed", "5", "--out", path("out.layout"), "layout", g});
    ASSERT_EQ(lay.code, 0) << lay.err;
    const std::string text = slurp(path("out.layout"));
    ASSERT_EQ(text.rfind("# ink ", 0), 0u);
    const std::string claimed = text.substr(6, text.find(' ', 6) - 6);
    const Result ink = invoke({"ink", g, path("out.layout")});
    EXPECT_EQ(ink.out, claimed + "\n");

    const Result js = invoke({"--seed", "5", "--format", "json", "--out", path("out.json"), "layout", g});
    ASSERT_EQ(js.code, 0);
    EXPECT_EQ(invoke({"ink", g, path("out.json")}).out, claimed + "\n");
}

TEST_F(CliTest, TraceAndSvg) {
    const std::string g = file("g.txt", "a b\nb c\nc a\n");
    const Result r = invoke({"layout", g, "--start", "b", "--trace", path("t.csv"), "--svg", path("d.svg")});
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string trace = slurp(path("t.csv"));
    EXPECT_EQ(trace.rfind("step,vertex,axis,position,stretch,incoming,outgoing,total,chosen\n", 0), 0u);
    EXPECT_NE(trace.find("0,b,x,1,0,0,0,0,1\n"), std::string::npos);
    EXPECT_NE(slurp(path("d.svg")).find("<svg"), std::string::npos);
    EXPECT_EQ(invoke({"layout", g, "--start", "zz"}).code, 2);
}

TEST_F(CliTest, ExactAndRandom) {
    const std::string g = file("g.dot", "digraph { a -> b -> c; c -> a; }\n");
    const Result dp = invoke({"exact", g});
    const Result bnb = invoke({"exact", g, "--method", "bnb"});
    ASSERT_EQ(dp.code, 0) << dp.err;
    EXPECT_EQ(dp.out, bnb.out);
    EXPECT_EQ(dp.out.rfind("# ink 8 ", 0), 0u);
    EXPECT_EQ(invoke({"exact", g, "--max-dp", "2"}).code, 2);
    const Result rnd = invoke({"--seed", "3", "random", g});
    EXPECT_EQ(rnd.code, 0);
    EXPECT_EQ(rnd.out, invoke({"--seed", "3", "random", g}).out);
}

TEST_F(CliTest, BenchExactNeverLosesToIncremental) {
    const Result r = invoke({"bench", "--sizes", "8", "--densities", "30", "--instances", "3", "--runs", "20",
                             "--threads", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "graph_id,n,m,algorithm,seed,ink,ink_x,ink_y,time_ms");
    std::map<std::string, long long> exact, best;
    int rows = 0;
    while (std::getline(in, line)) {
        std::vector<std::string> f;
        std::stringstream ls(line);
        for (std::string cell; std::getline(ls, cell, ',');) f.push_back(cell);
        ASSERT_GE(f.size(), 8u);
        const long long ink = std::stoll(f[5]);
        if (f[3] == "exact") exact[f[0]] = ink;
        if (f[3] == "incremental") best[f[0]] = best.count(f[0]) ? std::min(best[f[0]], ink) : ink;
        ++rows;
    }
    EXPECT_EQ(rows, 3 * (20 + 1 + 20));
    ASSERT_EQ(exact.size(), 3u);
    for (const auto& [id, v] : exact) EXPECT_LE(v, best.at(id));
}

TEST_F(CliTest, BenchWarnsAboutInfeasibleCellsAndWritesSummary) {
    const Result r = invoke({"bench", "--sizes", "8", "--densities", "10,30", "--instances", "1", "--runs", "2",
                             "--summary", path("s.json")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("warning: cell n=8 p=10"), std::string::npos);
    const std::string summary = slurp(path("s.json"));
    EXPECT_NE(summary.find("\"cells\""), std::string::npos);
    EXPECT_NE(summary.find("\"saved_ink\""), std::string::npos);
}

TEST_F(CliTest, UsageErrorsExitOne) {
    EXPECT_EQ(invoke({}).code, 1);
    EXPECT_EQ(invoke({"frobnicate"}).code, 1);
    EXPECT_EQ(invoke({"emit-lp", "x.txt", "--axis", "z"}).code, 1);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST_F(CliTest, InputErrorsExitTwo) {
    const Result loop = invoke({"layout", file("loop.txt", "a b\nb b\n")});
    EXPECT_EQ(loop.code, 2);
    EXPECT_NE(loop.err.find("line 2"), std::string::npos);
    EXPECT_EQ(invoke({"layout", path("missing.txt")}).code, 2);
    EXPECT_EQ(invoke({"layout", file("split.txt", "a b\nc d\n")}).code, 2);
    const std::string g = file("g.txt", "a b\n");
    EXPECT_EQ(invoke({"ink", g, file("bad.layout", "a 1 1\nb 1 2\n")}).code, 2);
    EXPECT_EQ(invoke({"ink", g, file("bad.json", "{\"vertices\": 3}")}).code, 2);
}

TEST_F(CliTest, EmitLp) {
    const std::string g = file("g.txt", "a b\n");
    const Result x = invoke({"emit-lp", g});
    ASSERT_EQ(x.code, 0);
    EXPECT_NE(x.out.find("edge_E_1_2: E_2"), std::string::npos);
    const Result y = invoke({"emit-lp", g, "--axis", "y"});
    EXPECT_NE(y.out.find("edge_N_1_2: N_1"), std::string::npos);
}

TEST_F(CliTest, Reduce) {
    const Result r = invoke({"reduce", file("base.txt", "a b\n"), "--k", "1", "--meta", path("m.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("# p 20\n"), std::string::npos);
    const DirectedGraph g = parse_edge_list(r.out);
    EXPECT_EQ(g.vertex_count(), 42);
    EXPECT_NE(slurp(path("m.json")).find("\"vertices\": 42"), std::string::npos);
}

TEST_F(CliTest, Gen) {
    const Result one = invoke({"--seed", "9", "gen", "--n", "10", "--p", "20"});
    ASSERT_EQ(one.code, 0);
    const DirectedGraph g = parse_edge_list(one.out);
    EXPECT_EQ(g.vertex_count(), 10);
    EXPECT_EQ(g.edge_count(), 18u);
    EXPECT_EQ(one.out, invoke({"--seed", "9", "gen", "--n", "10", "--p", "20"}).out);
    const DirectedGraph d = parse_dot(invoke({"--seed", "9", "--format", "dot", "gen", "--n", "10", "--p", "20"}).out);
    auto labelled = [](const DirectedGraph& h) {
        std::set<std::pair<std::string, std::string>> out;
        for (const Edge& e : h.edges()) out.emplace(h.label(e.src), h.label(e.dst));
        return out;
    };
    EXPECT_EQ(labelled(d), labelled(g));

    const Result suite = invoke({"gen", "--sizes", "6,7", "--densities", "40", "--instances", "2", "--dir",
                                 path("suite")});
    ASSERT_EQ(suite.code, 0) << suite.err;
    EXPECT_TRUE(fs::exists(path("suite") + "/n7-p40-1.txt"));
    EXPECT_EQ(invoke({"gen"}).code, 2);
    EXPECT_EQ(invoke({"gen", "--n", "10", "--p", "5"}).code, 2);
}
