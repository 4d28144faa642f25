#include "pathpebble/acceptance.hpp"

#include "pathpebble/generators.hpp"
#include "pathpebble/pebbling.hpp"
#include "pathpebble/verification.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <optional>
#include <random>
#include <set>
#include <sstream>

namespace pathpebble {

namespace {
    struct Failures {
        std::size_t count = 0;
        std::string first;

        void add(std::string message)
        {
            if (count++ == 0)
                first = std::move(message);
        }

        auto summary(const std::string & ok) const -> std::string
        {
            return count == 0 ? ok : std::to_string(count) + " violation(s), first: " + first;
        }
    };

    /// Null when the outcome holds up against the validators.
    auto check_outcome(const Graph & host, int t, const Outcome & o, bool ask_oracle) -> std::optional<std::string>
    {
        if (const auto * full = std::get_if<FullDecomposition>(&o.result)) {
            auto report = validate_decomposition(full->decomposition, host);
            if (! report.ok)
                return "full decomposition invalid: " + report.message;
            if (report.width > f_bound(t) - 1)
                return "width " + std::to_string(report.width) + " exceeds f(t) - 1";
            return std::nullopt;
        }
        if (const auto * fat = std::get_if<FatFactor>(&o.result)) {
            auto report = validate_embedding(fat->certificate, fat->guest, host);
            if (! report.ok)
                return "certificate invalid: " + report.message;
            auto local = validate_decomposition(fat->decomposition, fat->factor.graph);
            if (! local.ok)
                return "factor decomposition invalid: " + local.message;
            if (ask_oracle && exact_pathwidth(host) <= t)
                return "fat factor on a host of pathwidth at most t";
            return std::nullopt;
        }
        const auto & reject = std::get<EdgeBoundReject>(o.result);
        if (static_cast<std::int64_t>(host.edge_count()) <= static_cast<std::int64_t>(t) * host.size()
                || static_cast<std::int64_t>(reject.edge_count) != static_cast<std::int64_t>(host.edge_count()))
            return "rejected a host with |E| <= t n";
        return std::nullopt;
    }

    /// glue(A, B) against the host, through factor_hosts and complement_hosts.
    auto check_round_trip(const Graph & host, const FatFactor & fat) -> std::optional<std::string>
    {
        Graph glued = glue(fat.factor, fat.complement);
        if (glued.size() != host.size())
            return "glued graph has " + std::to_string(glued.size()) + " vertices, host has "
                + std::to_string(host.size());
        std::vector<Vertex> host_of(glued.size(), -1);
        for (std::size_t i = 0; i < fat.factor_hosts.size(); ++i)
            host_of[i] = fat.factor_hosts[i];
        auto mapping = glue_mapping(fat.factor, fat.complement);
        for (std::size_t j = 0; j < mapping.size(); ++j) {
            auto & slot = host_of[mapping[j]];
            if (slot >= 0 && slot != fat.complement_hosts[j])
                return "boundary vertex maps to two host vertices";
            slot = fat.complement_hosts[j];
        }
        std::vector<bool> hit(host.size(), false);
        for (Vertex h : host_of) {
            if (h < 0 || h >= host.size() || hit[h])
                return "id mapping is not a bijection";
            hit[h] = true;
        }
        std::vector<Edge> mapped;
        for (const auto & e : glued.edges())
            mapped.push_back({std::min(host_of[e.u], host_of[e.v]), std::max(host_of[e.u], host_of[e.v])});
        std::sort(mapped.begin(), mapped.end());
        if (! std::ranges::equal(mapped, host.edges()))
            return "glued edges differ from host edges";
        return std::nullopt;
    }

    auto random_host(int i, std::mt19937_64 & rng) -> Graph
    {
        auto n = std::uniform_int_distribution<Vertex>(1, 16)(rng);
        auto max_edges = static_cast<std::size_t>(n) * (n - 1) / 2;
        switch (i % 4) {
            case 0:
                return generators::random_tree(n, rng);
            case 1:
                return generators::random_caterpillar(n, 3, rng);
            case 2: {
                auto extra = std::uniform_int_distribution<std::size_t>(0, static_cast<std::size_t>(n) / 2)(rng);
                return generators::random_gnm(n, std::min(max_edges, n - 1 + extra), rng);
            }
            default: {
                auto m = std::uniform_int_distribution<std::size_t>(n, 3 * static_cast<std::size_t>(n))(rng);
                return generators::random_gnm(n, std::min(max_edges, m), rng);
            }
        }
    }

    auto options_for(int i) -> RunOptions
    {
        RunOptions options;
        options.relabel = (i / 2) % 2 ? RelabelMode::Expand : RelabelMode::Shift;
        options.strategy = (i / 4) % 2 ? Strategy::LowestLabel : Strategy::Deepest;
        if ((i / 8) % 2)
            options.seed = static_cast<std::uint64_t>(i);
        return options;
    }

    auto constants(const AcceptanceConfig & config) -> CriterionResult
    {
        CriterionResult r{1, "constants: f(t) = 3, 15, 63, 255 and obstruction orders 2, 7, 22, 57", false, {}, 0, 1};
        constexpr std::array<std::int64_t, 4> f{3, 15, 63, 255};
        constexpr std::array<Vertex, 4> orders{2, 7, 22, 57};
        Failures failures;
        for (int t = 0; t <= 3; ++t) {
            if (f_bound(t) != f[t])
                failures.add("f(" + std::to_string(t) + ") = " + std::to_string(f_bound(t)));
            std::set<Vertex> seen;
            config.obstructions(t, [&] (const ObstructionTree & obs) {
                    seen.insert(obs.tree.size());
                    return true;
                    });
            if (seen.empty())
                failures.add("no obstructions for t = " + std::to_string(t));
            for (Vertex order : seen)
                if (order != orders[t])
                    failures.add("t = " + std::to_string(t) + ": generated order " + std::to_string(order)
                            + ", expected " + std::to_string(orders[t]));
        }
        r.passed = failures.count == 0;
        r.detail = failures.summary("all equal");
        return r;
    }

    auto obstruction_pathwidth(const AcceptanceConfig & config) -> CriterionResult
    {
        CriterionResult r{2, "obstruction pathwidth: exact pathwidth is t + 1 for t = 0, 1, 2", false, {}, 0, 120};
        Failures failures;
        std::size_t checked = 0;
        for (int t = 0; t <= 2; ++t)
            config.obstructions(t, [&] (const ObstructionTree & obs) {
                    ++checked;
                    int pw = exact_pathwidth(obs.tree, OracleLimit::Forced);
                    if (pw != t + 1)
                        failures.add("t = " + std::to_string(t) + " tree on " + std::to_string(obs.tree.size())
                                + " vertices has pathwidth " + std::to_string(pw));
                    return true;
                    });
        if (checked == 0)
            failures.add("no obstructions");
        r.passed = failures.count == 0;
        r.detail = failures.summary(std::to_string(checked) + " trees checked");
        return r;
    }

    auto binary_tree_bound() -> CriterionResult
    {
        CriterionResult r{3, "binary trees: pw(B4) = 2, pw(B2) = 1", false, {}, 0, 10};
        int b4 = exact_pathwidth(generators::complete_binary_tree(4));
        int b2 = exact_pathwidth(generators::complete_binary_tree(2));
        r.passed = b4 == 2 && b2 == 1;
        r.detail = "pw(B4) = " + std::to_string(b4) + ", pw(B2) = " + std::to_string(b2);
        return r;
    }

    struct FatCase {
        Graph host;
        FatFactor fat;
    };

    auto dichotomy(const AcceptanceConfig & config, std::vector<FatCase> & fats) -> CriterionResult
    {
        CriterionResult r{4, "dichotomy: " + std::to_string(config.random_graphs)
            + " random hosts, n <= 16, t in {1, 2}, plus 10 seeds each on 20 of them", false, {}, 0, 300};
        std::mt19937_64 rng(config.seed);
        Failures failures;
        std::array<std::size_t, 3> kinds{};
        for (int i = 0; i < config.random_graphs; ++i) {
            Graph host = random_host(i, rng);
            int t = 1 + (i / 16) % 2;
            auto check = [&] (const RunOptions & options) {
                Outcome o = run(host, t, options);
                ++kinds[o.result.index()];
                if (auto error = check_outcome(host, t, o, true))
                    failures.add("host " + std::to_string(i) + ", t = " + std::to_string(t) + ": " + *error);
                return o;
            };
            Outcome o = check(options_for(i));
            if (auto * fat = std::get_if<FatFactor>(&o.result))
                fats.push_back({host, std::move(*fat)});
            if (i < 20)
                for (std::uint64_t seed = 1; seed <= 10; ++seed) {
                    RunOptions options = options_for(i);
                    options.seed = seed;
                    check(options);
                }
        }
        r.passed = failures.count == 0;
        r.detail = failures.summary(std::to_string(kinds[0]) + " full, " + std::to_string(kinds[1]) + " fat, "
                + std::to_string(kinds[2]) + " rejected, all valid");
        return r;
    }

    auto round_trip(const std::vector<FatCase> & fats) -> CriterionResult
    {
        CriterionResult r{5, "factorization: glue(A, B) matches the host for every fat factor", false, {}, 0, 300};
        Failures failures;
        for (const auto & c : fats)
            if (auto error = check_round_trip(c.host, c.fat))
                failures.add(*error);
        r.passed = failures.count == 0 && ! fats.empty();
        r.detail = fats.empty() ? "no fat factors to check" : failures.summary(std::to_string(fats.size()) + " factors glued back");
        return r;
    }

    auto linear_budget(const AcceptanceConfig & config) -> CriterionResult
    {
        CriterionResult r{6, "linear budget: touches <= 2|E| + |V| and snapshots <= n at n = 1e4, 1e5", false, {}, 0, 30};
        Failures failures;
        std::mt19937_64 rng(config.seed + 6);
        std::uint64_t worst_touches = 0, worst_budget = 1;
        for (Vertex n : {10'000, 100'000})
            for (int family = 0; family < 2; ++family) {
                Graph host = family == 0 ? generators::random_tree(n, rng)
                    : generators::random_gnm(n, static_cast<std::size_t>(n), rng);
                Outcome o = run(host, 2);
                auto budget = 2 * static_cast<std::uint64_t>(host.edge_count()) + static_cast<std::uint64_t>(n);
                if (o.stats.touches * worst_budget > worst_touches * budget) {
                    worst_touches = o.stats.touches;
                    worst_budget = budget;
                }
                std::string what = (family == 0 ? "tree n = " : "sparse n = ") + std::to_string(n);
                if (o.stats.touches > budget)
                    failures.add(what + ": " + std::to_string(o.stats.touches) + " touches > " + std::to_string(budget));
                if (o.history.bags.size() > static_cast<std::size_t>(n))
                    failures.add(what + ": " + std::to_string(o.history.bags.size()) + " snapshots");
            }
        char ratio[64];
        std::snprintf(ratio, sizeof ratio, "largest touches / budget = %.3f",
                static_cast<double>(worst_touches) / static_cast<double>(worst_budget));
        r.passed = failures.count == 0;
        r.detail = failures.summary(ratio);
        return r;
    }

    auto pathwidth_one_hosts(const AcceptanceConfig & config) -> CriterionResult
    {
        CriterionResult r{7, "forcing: paths and caterpillars up to 1e5 at t = 1 give full decompositions", false, {}, 0, 120};
        Failures failures;
        std::mt19937_64 rng(config.seed + 7);
        std::vector<std::pair<std::string, Graph>> hosts;
        for (Vertex n : {1, 2, 3, 10, 100, 1000, 10'000, 100'000})
            hosts.emplace_back("path " + std::to_string(n), generators::path(n));
        for (auto [spine, legs] : {std::pair{1, 3}, {5, 2}, {100, 4}, {1000, 1}, {20'000, 4}})
            hosts.emplace_back("caterpillar " + std::to_string(spine) + "x" + std::to_string(legs),
                    generators::caterpillar(spine, legs));
        for (Vertex n : {50, 5000, 100'000})
            hosts.emplace_back("random caterpillar " + std::to_string(n), generators::random_caterpillar(n, 5, rng));
        hosts.emplace_back("shuffled path 100000", generators::shuffled(generators::path(100'000), rng));
        hosts.emplace_back("shuffled caterpillar", generators::shuffled(generators::random_caterpillar(100'000, 3, rng), rng));

        std::size_t runs = 0;
        for (const auto & [name, host] : hosts)
            for (int variant = 0; variant < 4; ++variant) {
                ++runs;
                Outcome o = run(host, 1, options_for(2 * variant));
                if (! o.is_full())
                    failures.add(name + ": not a full decomposition");
                else if (auto error = check_outcome(host, 1, o, false))
                    failures.add(name + ": " + *error);
            }
        r.passed = failures.count == 0;
        r.detail = failures.summary(std::to_string(runs) + " runs, all full and valid");
        return r;
    }

    auto scripted_trace() -> CriterionResult
    {
        CriterionResult r{8, "scripted K1,3 guest: traces match the snapshots and outcomes validate", false, {}, 0, 10};
        Failures failures;
        const std::vector<TokenLabel> flags{TokenLabel::parse("-"), TokenLabel::parse("1"),
            TokenLabel::parse("11"), TokenLabel::parse("10")};
        const std::set<std::string> events{"root-place", "place", "remove", "relabel", "shift", "snapshot"};
        std::vector<std::pair<std::string, Graph>> hosts{
            {"star with centre 3", generators::star(3, 3)},
            {"star with centre 0", generators::star(3, 0)},
            {"path 6", generators::path(6)},
            {"caterpillar 3x2", generators::caterpillar(3, 2)},
            {"B3", generators::complete_binary_tree(3)}};
        std::size_t fat = 0;
        for (const auto & [name, host] : hosts)
            for (auto mode : {RelabelMode::Shift, RelabelMode::Expand}) {
                std::ostringstream trace;
                RunOptions options;
                options.guest = GuestChoice::Custom;
                options.custom_flags = flags;
                options.relabel = mode;
                options.trace = &trace;
                Outcome o = run(host, 1, options);
                fat += o.is_fat();
                if (auto error = check_outcome(host, 1, o, false))
                    failures.add(name + ": " + *error);
                // the guest is no obstruction, so a fat factor only bounds the
                // host's pathwidth by the guest's
                if (const auto * f = std::get_if<FatFactor>(&o.result);
                        f && exact_pathwidth(host) < exact_pathwidth(f->guest))
                    failures.add(name + ": host pathwidth below the embedded guest's");

                std::istringstream lines(trace.str());
                std::size_t snapshots = 0;
                std::uint64_t step = 0;
                for (std::string line; std::getline(lines, line);) {
                    auto event = nlohmann::json::parse(line, nullptr, false);
                    if (event.is_discarded() || ! event.contains("event") || ! event.contains("step")
                            || ! events.count(event["event"].get<std::string>())) {
                        failures.add(name + ": malformed trace line " + line);
                        break;
                    }
                    auto s = event["step"].get<std::uint64_t>();
                    if (s < step)
                        failures.add(name + ": trace steps go backwards");
                    step = s;
                    if (event["event"] == "snapshot") {
                        if (snapshots >= o.history.bags.size()
                                || event["bag"].get<std::vector<Vertex>>() != o.history.bags[snapshots])
                            failures.add(name + ": traced snapshot differs from history");
                        ++snapshots;
                    }
                }
                if (snapshots != o.history.bags.size())
                    failures.add(name + ": trace has " + std::to_string(snapshots) + " snapshots, history "
                            + std::to_string(o.history.bags.size()));
            }
        if (fat == 0)
            failures.add("no run embedded the K1,3 guest");
        r.passed = failures.count == 0;
        r.detail = failures.summary(std::to_string(2 * hosts.size()) + " traced runs, " + std::to_string(fat)
                + " fat factors, all valid");
        return r;
    }

    template <typename F>
    auto timed(int id, F && criterion) -> CriterionResult
    {
        auto start = std::chrono::steady_clock::now();
        CriterionResult r{id, "criterion " + std::to_string(id), false, {}, 0, 0};
        try {
            r = criterion();
        }
        catch (const std::exception & e) {
            r.passed = false;
            r.detail = std::string("threw: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (r.limit_seconds > 0 && r.seconds > r.limit_seconds) {
            r.passed = false;
            r.detail += "; over the time limit";
        }
        return r;
    }
}

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig &config)
{
    std::vector<CriterionResult> results;
    std::vector<FatCase> fats;
    results.push_back(timed(1, [&] { return constants(config); }));
    results.push_back(timed(2, [&] { return obstruction_pathwidth(config); }));
    results.push_back(timed(3, [&] { return binary_tree_bound(); }));
    results.push_back(timed(4, [&] { return dichotomy(config, fats); }));
    results.push_back(timed(5, [&] { return round_trip(fats); }));
    results.push_back(timed(6, [&] { return linear_budget(config); }));
    results.push_back(timed(7, [&] { return pathwidth_one_hosts(config); }));
    results.push_back(timed(8, [&] { return scripted_trace(); }));
    return results;
}

std::string format_result(const CriterionResult &result)
{
    char timing[64];
    std::snprintf(timing, sizeof timing, " (%.2f s / %.0f s)", result.seconds, result.limit_seconds);
    return std::string(result.passed ? "PASS" : "FAIL") + "  [" + std::to_string(result.id) + "] " + result.name
        + ": " + result.detail + timing;
}

} // namespace pathpebble
