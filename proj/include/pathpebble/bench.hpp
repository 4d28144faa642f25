#pragma once

#include "pathpebble/graph.hpp"
#include "pathpebble/pebbling.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pathpebble {

enum class BenchFamily {
    RandomTree,    ///< uniform random labelled tree
    GridStrip,     ///< 3 x ceil(n / 3) grid cut down to n vertices
    RandomSparse   ///< G(n, m) with m = n
};

/// "random-tree", "grid-strip", "random-sparse".
BenchFamily parse_bench_family(std::string_view name);
const char *bench_family_name(BenchFamily family);

/// Host graph of the family on n vertices.
Graph bench_graph(BenchFamily family, Vertex n, std::mt19937_64 &rng);

struct BenchRow {
    Vertex n = 0;
    std::size_t edges = 0;
    std::uint64_t touches = 0;
    /// 2|E| + |V|
    std::uint64_t budget = 0;
    std::size_t snapshots = 0;
    double seconds = 0;
    std::string outcome;
    bool within_budget() const noexcept { return touches <= budget; }
};

struct BenchConfig {
    BenchFamily family = BenchFamily::RandomTree;
    int t = 2;
    std::uint64_t seed = 1;
    RunOptions options;
    /// Worker threads; each instance runs on its own state.
    unsigned jobs = 1;
};

/// One row per size, in the order given. Instance i uses an rng seeded with
/// seed + i, so rows do not depend on jobs.
std::vector<BenchRow> run_bench(std::span<const Vertex> sizes, const BenchConfig &config);

/// Expected time(2n) / time(n) for a linear run. Advisory only: wall time
/// depends on the machine, and runs that stop early at a fat factor are
/// too short to time.
constexpr double advisory_ratio_low = 1.4;
constexpr double advisory_ratio_high = 3.0;

/// time(row i) / time(row i - 1), for rows where the previous time is nonzero.
std::vector<std::optional<double>> time_ratios(std::span<const BenchRow> rows);

nlohmann::json bench_to_json(std::span<const BenchRow> rows);

} // namespace pathpebble
