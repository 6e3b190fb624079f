#include "ldraw/suite.hpp"

#include "ldraw/error.hpp"
#include "ldraw/incremental.hpp"
#include "ldraw/seed.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <thread>
#include <tuple>

namespace ldraw {

std::string_view to_string(Algorithm a) {
    switch (a) {
    case Algorithm::incremental: return "incremental";
    case Algorithm::exact: return "exact";
    case Algorithm::random: return "random";
    }
    return "unknown";
}

std::optional<Algorithm> algorithm_from_string(std::string_view name) {
    for (Algorithm a : {Algorithm::incremental, Algorithm::exact, Algorithm::random})
        if (to_string(a) == name) return a;
    return std::nullopt;
}

Layout random_layout(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Layout l;
    l.xs.resize(static_cast<std::size_t>(n));
    l.ys.resize(static_cast<std::size_t>(n));
    std::iota(l.xs.begin(), l.xs.end(), 1);
    std::iota(l.ys.begin(), l.ys.end(), 1);
    std::shuffle(l.xs.begin(), l.xs.end(), rng);
    std::shuffle(l.ys.begin(), l.ys.end(), rng);
    return l;
}

namespace {

// Tags used with derive_seed; fixed so that seeds are stable across versions.
constexpr std::uint64_t kGraphTag = 1;
constexpr std::uint64_t kRunTag = 2;

std::uint64_t algorithm_tag(Algorithm a) { return static_cast<std::uint64_t>(a) + 10; }

} // namespace

std::vector<SuiteInstance> generate_suite(const SuiteSpec& spec, std::vector<CellError>& errors) {
    std::vector<SuiteInstance> instances;
    for (int n : spec.sizes) {
        for (int p : spec.densities) {
            if (n > spec.max_size) {
                errors.push_back({n, p, "n=" + std::to_string(n) + " exceeds the size limit " +
                                            std::to_string(spec.max_size)});
                continue;
            }
            try {
                for (int i = 0; i < spec.instances; ++i) {
                    const std::uint64_t seed = derive_seed(spec.seed, {kGraphTag, static_cast<std::uint64_t>(n),
                                                                       static_cast<std::uint64_t>(p),
                                                                       static_cast<std::uint64_t>(i)});
                    SuiteInstance inst;
                    inst.id = "n" + std::to_string(n) + "-p" + std::to_string(p) + "-" + std::to_string(i);
                    inst.n = n;
                    inst.density = p;
                    inst.index = i;
                    inst.graph = random_connected_gnm(n, p, seed);
                    instances.push_back(std::move(inst));
                }
            } catch (const InvalidInput& e) {
                errors.push_back({n, p, e.what()});
            }
        }
    }
    return instances;
}

namespace {

struct Task {
    std::size_t instance = 0;
    Algorithm algorithm = Algorithm::incremental;
    int run = 0;
};

RunRecord execute(const SuiteSpec& spec, const SuiteInstance& inst, const Task& task) {
    RunRecord rec;
    rec.graph_id = inst.id;
    rec.n = inst.graph.vertex_count();
    rec.m = static_cast<std::int64_t>(inst.graph.edge_count());
    rec.algorithm = task.algorithm;
    rec.run = task.run;
    rec.seed = derive_seed(spec.seed, {kRunTag, static_cast<std::uint64_t>(inst.n),
                                       static_cast<std::uint64_t>(inst.density),
                                       static_cast<std::uint64_t>(inst.index), algorithm_tag(task.algorithm),
                                       static_cast<std::uint64_t>(task.run)});

    const auto start = std::chrono::steady_clock::now();
    switch (task.algorithm) {
    case Algorithm::incremental: {
        std::mt19937_64 rng(rec.seed);
        std::uniform_int_distribution<int> pick(0, rec.n - 1);
        const Vertex first = pick(rng);
        rec.layout = incremental_draw(inst.graph, first, rng());
        break;
    }
    case Algorithm::random:
        rec.layout = random_layout(rec.n, rec.seed);
        break;
    case Algorithm::exact:
        rec.layout = exact_layout(inst.graph, ExactMethod::subset_dp, spec.exact_limits).layout;
        break;
    }
    const auto stop = std::chrono::steady_clock::now();
    rec.time_ms = std::chrono::duration<double, std::milli>(stop - start).count();

    const InkBreakdown ink = compute_ink(inst.graph, rec.layout);
    rec.ink = ink.ink;
    rec.ink_x = ink.ink_x;
    rec.ink_y = ink.ink_y;
    return rec;
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
    std::size_t workers = threads > 0 ? static_cast<std::size_t>(threads)
                                      : std::max<std::size_t>(1, std::thread::hardware_concurrency());
    workers = std::min(workers, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> failures(workers);
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = next++; i < count; i = next++) body(i);
                } catch (...) {
                    failures[w] = std::current_exception();
                    next = count;
                }
            });
        }
    }
    for (auto& f : failures)
        if (f) std::rethrow_exception(f);
}

} // namespace

SuiteResult run_suite(const SuiteSpec& spec) {
    if (spec.runs < 1) throw InvalidInput("runs must be >= 1");
    if (spec.instances < 1) throw InvalidInput("instances must be >= 1");

    SuiteResult result;
    result.instances = generate_suite(spec, result.errors);

    std::vector<Task> tasks;
    std::vector<std::pair<int, int>> exact_skipped;
    for (std::size_t i = 0; i < result.instances.size(); ++i) {
        const SuiteInstance& inst = result.instances[i];
        for (int r = 0; r < spec.runs; ++r) tasks.push_back({i, Algorithm::incremental, r});
        if (spec.run_exact) {
            if (inst.n <= spec.exact_limits.max_subset_dp) {
                tasks.push_back({i, Algorithm::exact, 0});
            } else if (exact_skipped.empty() || exact_skipped.back() != std::pair{inst.n, inst.density}) {
                exact_skipped.emplace_back(inst.n, inst.density);
            }
        }
        if (spec.run_random)
            for (int r = 0; r < spec.runs; ++r) tasks.push_back({i, Algorithm::random, r});
    }
    for (auto [n, p] : exact_skipped)
        result.errors.push_back({n, p, "exact solver skipped: n=" + std::to_string(n) + " exceeds the guard " +
                                           std::to_string(spec.exact_limits.max_subset_dp)});

    // Tasks are already in (instance, algorithm, run) order and each writes
    // its own slot, so scheduling never changes the output.
    std::sort(tasks.begin(), tasks.end(), [](const Task& a, const Task& b) {
        return std::tuple(a.instance, static_cast<int>(a.algorithm), a.run) <
               std::tuple(b.instance, static_cast<int>(b.algorithm), b.run);
    });
    result.records.resize(tasks.size());
    parallel_for(tasks.size(), spec.threads, [&](std::size_t k) {
        result.records[k] = execute(spec, result.instances[tasks[k].instance], tasks[k]);
    });
    return result;
}

std::string records_to_csv(const std::vector<RunRecord>& records, bool include_timing) {
    std::string out = "graph_id,n,m,algorithm,seed,ink,ink_x,ink_y,time_ms\n";
    for (const RunRecord& r : records) {
        out += r.graph_id + "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," +
               std::string(to_string(r.algorithm)) + "," + std::to_string(r.seed) + "," + std::to_string(r.ink) +
               "," + std::to_string(r.ink_x) + "," + std::to_string(r.ink_y) + ",";
        if (include_timing) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3f", r.time_ms);
            out += buf;
        }
        out += "\n";
    }
    return out;
}

Stats summarize_values(const std::vector<std::int64_t>& values) {
    Stats s;
    s.count = values.size();
    if (values.empty()) return s;
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    s.min = *lo;
    s.max = *hi;
    double sum = 0;
    for (auto v : values) sum += static_cast<double>(v);
    s.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double sq = 0;
        for (auto v : values) sq += (static_cast<double>(v) - s.mean) * (static_cast<double>(v) - s.mean);
        s.stddev = std::sqrt(sq / static_cast<double>(values.size() - 1));
    }
    return s;
}

std::vector<InstanceSummary> summarize_instances(const SuiteResult& result) {
    std::map<std::string, const SuiteInstance*> by_id;
    for (const auto& inst : result.instances) by_id.emplace(inst.id, &inst);

    std::vector<InstanceSummary> out;
    std::size_t i = 0;
    while (i < result.records.size()) {
        std::size_t j = i;
        std::vector<std::int64_t> inks;
        while (j < result.records.size() && result.records[j].graph_id == result.records[i].graph_id &&
               result.records[j].algorithm == result.records[i].algorithm) {
            inks.push_back(result.records[j].ink);
            ++j;
        }
        const SuiteInstance& inst = *by_id.at(result.records[i].graph_id);
        out.push_back({inst.id, inst.n, inst.density, result.records[i].algorithm, summarize_values(inks)});
        i = j;
    }
    return out;
}

std::vector<CellSummary> summarize_cells(const SuiteResult& result) {
    std::map<std::string, std::pair<int, int>> cell_of;
    for (const auto& inst : result.instances) cell_of.emplace(inst.id, std::pair{inst.n, inst.density});

    std::map<std::tuple<int, int, int>, std::vector<std::int64_t>> inks;
    for (const RunRecord& r : result.records) {
        const auto [n, p] = cell_of.at(r.graph_id);
        inks[{n, p, static_cast<int>(r.algorithm)}].push_back(r.ink);
    }

    std::vector<CellSummary> out;
    for (const auto& [key, values] : inks) {
        const auto [n, p, alg] = key;
        CellSummary c;
        c.n = n;
        c.density = p;
        c.algorithm = static_cast<Algorithm>(alg);
        c.ink = summarize_values(values);
        c.max_ink = 2.0 * n * (n - 1);
        c.saved_ink = c.max_ink - c.ink.mean;
        out.push_back(c);
    }
    return out;
}

} // namespace ldraw
