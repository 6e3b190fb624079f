#pragma once

#include "ldraw/exact.hpp"
#include "ldraw/graph.hpp"
#include "ldraw/layout.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ldraw {

enum class Algorithm { incremental, exact, random };

std::string_view to_string(Algorithm a);
std::optional<Algorithm> algorithm_from_string(std::string_view name);

/// Uniform random permutation on each axis.
Layout random_layout(int n, std::uint64_t seed);

/// Grid of random connected graphs: one cell per (size, density) pair.
struct SuiteSpec {
    std::vector<int> sizes;
    std::vector<int> densities;
    int instances = 10;
    int runs = 50;
    std::uint64_t seed = 1;
    bool run_exact = true;
    bool run_random = true;
    int max_size = 200;
    ExactLimits exact_limits{};
    int threads = 0; ///< 0 = hardware concurrency
};

struct SuiteInstance {
    std::string id; ///< "n<n>-p<p>-<index>"
    int n = 0;
    int density = 0;
    int index = 0;
    DirectedGraph graph;
};

struct CellError {
    int n = 0;
    int density = 0;
    std::string message;
};

/// Generates every instance; cells that cannot be generated (size above
/// max_size, connectivity infeasible) are reported in `errors` and skipped.
std::vector<SuiteInstance> generate_suite(const SuiteSpec& spec, std::vector<CellError>& errors);

struct RunRecord {
    std::string graph_id;
    int n = 0;
    std::int64_t m = 0;
    Algorithm algorithm = Algorithm::incremental;
    int run = 0;
    std::uint64_t seed = 0;
    std::int64_t ink = 0;
    std::int64_t ink_x = 0;
    std::int64_t ink_y = 0;
    double time_ms = 0.0;
    Layout layout;
};

struct SuiteResult {
    std::vector<SuiteInstance> instances;
    std::vector<RunRecord> records; ///< ordered by instance, algorithm, run
    std::vector<CellError> errors;
};

/// Runs incremental (fresh BFS start and shuffle per run), random (fresh
/// permutations per run) and, within the exact solver's guard, one exact run
/// per instance. Runs execute on a bounded worker pool; record order does not
/// depend on scheduling.
SuiteResult run_suite(const SuiteSpec& spec);

/// CSV with header graph_id,n,m,algorithm,seed,ink,ink_x,ink_y,time_ms.
/// Without `include_timing` the time_ms column is left empty so the output
/// is reproducible.
std::string records_to_csv(const std::vector<RunRecord>& records, bool include_timing);

struct Stats {
    std::size_t count = 0;
    double mean = 0.0;
    double stddev = 0.0; ///< sample standard deviation (0 for a single value)
    std::int64_t min = 0;
    std::int64_t max = 0;
};

Stats summarize_values(const std::vector<std::int64_t>& values);

struct InstanceSummary {
    std::string graph_id;
    int n = 0;
    int density = 0;
    Algorithm algorithm = Algorithm::incremental;
    Stats ink;
};

struct CellSummary {
    int n = 0;
    int density = 0;
    Algorithm algorithm = Algorithm::incremental;
    Stats ink;              ///< over every run in the cell
    double max_ink = 0.0;   ///< 2n(n-1), the ink of any drawing of K_n
    double saved_ink = 0.0; ///< max_ink - ink.mean
};

std::vector<InstanceSummary> summarize_instances(const SuiteResult& result);
std::vector<CellSummary> summarize_cells(const SuiteResult& result);

} // namespace ldraw
