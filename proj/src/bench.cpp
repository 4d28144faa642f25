#include "pathpebble/bench.hpp"

#include "pathpebble/generators.hpp"
#include "pathpebble/outcome_json.hpp"

#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

namespace pathpebble {

BenchFamily parse_bench_family(std::string_view name)
{
    if (name == "random-tree")
        return BenchFamily::RandomTree;
    if (name == "grid-strip")
        return BenchFamily::GridStrip;
    if (name == "random-sparse")
        return BenchFamily::RandomSparse;
    throw std::invalid_argument("unknown bench family '" + std::string(name) + "'");
}

const char *bench_family_name(BenchFamily family)
{
    switch (family) {
        case BenchFamily::RandomTree: return "random-tree";
        case BenchFamily::GridStrip: return "grid-strip";
        case BenchFamily::RandomSparse: return "random-sparse";
    }
    return "?";
}

Graph bench_graph(BenchFamily family, Vertex n, std::mt19937_64 &rng)
{
    switch (family) {
        case BenchFamily::RandomTree:
            return generators::random_tree(n, rng);
        case BenchFamily::GridStrip: {
            constexpr Vertex rows = 3;
            auto full = generators::grid(rows, (n + rows - 1) / rows);
            std::vector<Vertex> keep(static_cast<std::size_t>(n));
            for (Vertex v = 0; v < n; ++v)
                keep[v] = v;
            return induced_subgraph(full, keep);
        }
        case BenchFamily::RandomSparse:
            return generators::random_gnm(n, static_cast<std::size_t>(n), rng);
    }
    throw std::invalid_argument("unknown bench family");
}

std::vector<BenchRow> run_bench(std::span<const Vertex> sizes, const BenchConfig &config)
{
    std::vector<BenchRow> rows(sizes.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < sizes.size();) {
            std::mt19937_64 rng(config.seed + i);
            Graph g = bench_graph(config.family, sizes[i], rng);
            auto start = std::chrono::steady_clock::now();
            Outcome o = run(g, config.t, config.options);
            auto stop = std::chrono::steady_clock::now();

            auto & row = rows[i];
            row.n = sizes[i];
            row.edges = g.edge_count();
            row.touches = o.stats.touches;
            row.budget = 2 * static_cast<std::uint64_t>(g.edge_count()) + static_cast<std::uint64_t>(g.size());
            row.snapshots = o.history.bags.size();
            row.seconds = std::chrono::duration<double>(stop - start).count();
            row.outcome = outcome_kind(o);
        }
    };

    unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(sizes.size())));
    if (jobs <= 1) {
        worker();
        return rows;
    }
    std::vector<std::jthread> threads;
    for (unsigned k = 0; k < jobs; ++k)
        threads.emplace_back(worker);
    threads.clear();
    return rows;
}

std::vector<std::optional<double>> time_ratios(std::span<const BenchRow> rows)
{
    std::vector<std::optional<double>> ratios(rows.size());
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i - 1].seconds > 0)
            ratios[i] = rows[i].seconds / rows[i - 1].seconds;
    return ratios;
}

nlohmann::json bench_to_json(std::span<const BenchRow> rows)
{
    auto ratios = time_ratios(rows);
    nlohmann::json table = nlohmann::json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto & r = rows[i];
        table.push_back({{"n", r.n}, {"vertices", r.n}, {"edges", r.edges}, {"touches", r.touches},
            {"budget", r.budget}, {"withinBudget", r.within_budget()}, {"snapshots", r.snapshots},
            {"seconds", r.seconds}, {"timeRatio", ratios[i] ? nlohmann::json(*ratios[i]) : nlohmann::json()},
            {"timeRatioInAdvisoryRange", ratios[i]
                ? nlohmann::json(*ratios[i] >= advisory_ratio_low && *ratios[i] <= advisory_ratio_high)
                : nlohmann::json()},
            {"outcome", r.outcome}});
    }
    return table;
}

} // namespace pathpebble
