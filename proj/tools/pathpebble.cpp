#include "pathpebble/acceptance.hpp"
#include "pathpebble/bench.hpp"
#include "pathpebble/graph.hpp"
#include "pathpebble/guest_tree.hpp"
#include "pathpebble/outcome_json.hpp"
#include "pathpebble/pebbling.hpp"
#include "pathpebble/verification.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

using namespace pathpebble;

namespace {
    constexpr int exit_ok = 0;
    constexpr int exit_error = 1;

    auto read_text(const std::string & path) -> std::string
    {
        if (path == "-")
            return {std::istreambuf_iterator<char>(std::cin), {}};
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw std::runtime_error("cannot open " + path);
        return {std::istreambuf_iterator<char>(in), {}};
    }

    auto load_graph(const std::string & path, const std::string & format) -> Graph
    {
        auto text = read_text(path);
        auto fmt = format == "auto" ? detect_format(text) : parse_format(format);
        return read_graph(std::string_view(text), fmt);
    }

    auto print(const Json & j) -> void
    {
        std::cout << j.dump(2) << '\n';
    }

    struct DecomposeArgs {
        std::string input;
        int t = 1;
        std::string guest = "obstruction";
        std::string relabel = "shift";
        std::string strategy = "deepest";
        std::optional<std::uint64_t> seed;
        std::string trace;
        std::string format = "auto";
    };

    auto decompose(const DecomposeArgs & args) -> int
    {
        Graph host = load_graph(args.input, args.format);
        RunOptions options;
        options.relabel = args.relabel == "expand" ? RelabelMode::Expand : RelabelMode::Shift;
        options.strategy = args.strategy == "lowest-label" ? Strategy::LowestLabel : Strategy::Deepest;
        options.seed = args.seed;
        if (args.guest == "obstruction")
            options.guest = GuestChoice::Obstruction;
        else if (args.guest == "complete")
            options.guest = GuestChoice::Complete;
        else {
            options.guest = GuestChoice::Custom;
            options.custom_flags = parse_flag_set(read_text(args.guest));
        }

        std::ofstream trace;
        if (! args.trace.empty()) {
            trace.open(args.trace);
            if (! trace)
                throw std::runtime_error("cannot write " + args.trace);
            options.trace = &trace;
        }

        Outcome o = run(host, args.t, options);
        print(outcome_to_json(o));
        return o.is_full() ? 0 : o.is_fat() ? 2 : 3;
    }

    struct VerifyArgs {
        std::string graph;
        std::string decomposition;
        std::string certificate;
        std::string guest;
        std::string format = "auto";
    };

    auto verify(const VerifyArgs & args) -> int
    {
        Graph host = load_graph(args.graph, args.format);
        Json report;
        bool ok = true;
        if (! args.decomposition.empty()) {
            auto d = decomposition_from_json(Json::parse(read_text(args.decomposition)));
            auto r = validate_decomposition(d, host);
            report["decomposition"] = {{"valid", r.ok}, {"width", r.width}, {"message", r.message}};
            ok = ok && r.ok;
        }
        if (! args.certificate.empty()) {
            auto doc = certificate_from_json(Json::parse(read_text(args.certificate)));
            std::optional<Graph> guest;
            if (! args.guest.empty())
                guest = load_graph(args.guest, "auto");
            else
                guest = doc.label_tree();
            if (! guest)
                throw std::runtime_error("a certificate without labels needs --guest");
            auto r = validate_embedding(doc.certificate, *guest, host);
            report["certificate"] = {{"valid", r.ok}, {"message", r.message}};
            ok = ok && r.ok;
        }
        if (args.decomposition.empty() && args.certificate.empty())
            throw std::runtime_error("verify needs --decomposition or --certificate");
        report["valid"] = ok;
        print(report);
        return ok ? exit_ok : exit_error;
    }

    auto oracle(const std::string & graph, const std::string & format, bool force) -> int
    {
        Graph g = load_graph(graph, format);
        int pw = exact_pathwidth(g, force ? OracleLimit::Forced : OracleLimit::Default);
        print({{"n", g.size()}, {"edges", g.edge_count()}, {"pathwidth", pw}});
        return exit_ok;
    }

    struct ObstructionArgs {
        int t = 1;
        bool embed = false;
        std::string output_dir;
        std::optional<std::size_t> limit;
    };

    auto gen_obstruction(const ObstructionArgs & args) -> int
    {
        namespace fs = std::filesystem;
        if (! args.output_dir.empty())
            fs::create_directories(args.output_dir);

        Json trees = Json::array();
        std::size_t count = 0, fitting = 0;
        for_each_obstruction(args.t, [&] (const ObstructionTree & obs) {
                if (args.limit && count >= *args.limit)
                    return false;
                auto index = count++;
                Json entry = graph_to_json(obs.tree);
                std::optional<EmbeddedObstruction> embedded;
                if (args.embed) {
                    try {
                        embedded = embed_in_binary_tree(obs);
                        ++fitting;
                        std::vector<std::string> names;
                        for (auto label : embedded->labels)
                            names.push_back(label.to_string());
                        entry["flags"] = names;
                        entry["depth"] = embedded->depth;
                    }
                    catch (const GraphError &) {
                        entry["flags"] = nullptr;
                    }
                }
                if (! args.output_dir.empty()) {
                    auto stem = fs::path(args.output_dir) / ("obstruction-t" + std::to_string(args.t) + "-"
                            + std::to_string(index));
                    std::ofstream(stem.string() + ".txt") << write_graph(obs.tree, GraphFormat::EdgeList);
                    if (embedded)
                        std::ofstream(stem.string() + ".flags") << write_flag_set(embedded->labels);
                }
                else {
                    trees.push_back(std::move(entry));
                }
                return true;
                });

        Json report{{"t", args.t}, {"order", obstruction_order(args.t)}, {"count", count}};
        if (args.embed)
            report["fitting"] = fitting;
        if (args.output_dir.empty())
            report["trees"] = std::move(trees);
        else
            report["directory"] = args.output_dir;
        print(report);
        return exit_ok;
    }

    struct BenchArgs {
        std::string family = "random-tree";
        std::string sizes;
        int t = 2;
        std::uint64_t seed = 1;
        unsigned jobs = 1;
    };

    auto bench(const BenchArgs & args) -> int
    {
        BenchConfig config;
        config.family = parse_bench_family(args.family);
        config.t = args.t;
        config.seed = args.seed;
        config.jobs = args.jobs;
        std::vector<Vertex> sizes;
        std::istringstream list(args.sizes);
        for (std::string item; std::getline(list, item, ',');)
            if (item.find_first_not_of(" \t") != std::string::npos)
                sizes.push_back(static_cast<Vertex>(std::stol(item)));
        auto rows = run_bench(sizes, config);
        bool ok = std::all_of(rows.begin(), rows.end(), [] (const BenchRow & r) { return r.within_budget(); });
        print({{"family", args.family}, {"t", args.t}, {"rows", bench_to_json(rows)}, {"withinBudget", ok}});
        return ok ? exit_ok : exit_error;
    }

    /// Reads gen-obstruction reports (one object or an array of them).
    auto table_source(const std::string & path) -> ObstructionSource
    {
        auto j = Json::parse(read_text(path));
        if (! j.is_array())
            j = Json::array({j});
        auto table = std::make_shared<std::map<int, std::vector<ObstructionTree>>>();
        for (const auto & level : j) {
            int t = level.at("t").get<int>();
            for (const auto & tree : level.at("trees"))
                (*table)[t].push_back({graph_from_json(tree), t});
        }
        return [table] (int t, const std::function<bool (const ObstructionTree &)> & visit) {
            auto it = table->find(t);
            if (it == table->end())
                return;
            for (const auto & obs : it->second)
                if (! visit(obs))
                    return;
        };
    }

    auto selftest(const std::string & table) -> int
    {
        AcceptanceConfig config;
        if (! table.empty())
            config.obstructions = table_source(table);
        auto results = run_acceptance(config);
        Json report = Json::array();
        bool ok = true;
        for (const auto & r : results) {
            std::cerr << format_result(r) << '\n';
            report.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail},
                {"seconds", r.seconds}, {"limitSeconds", r.limit_seconds}});
            ok = ok && r.passed;
        }
        print({{"passed", ok}, {"criteria", report}});
        return ok ? exit_ok : exit_error;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Pathwidth pebbling: path-decompositions or obstruction certificates"};
    app.require_subcommand(1);

    auto format_option = [] (CLI::App * cmd, std::string & format) {
        cmd->add_option("--format", format, "Graph file format")
            ->check(CLI::IsMember({"auto", "edge-list", "edgelist", "dimacs"}))
            ->capture_default_str();
    };

    DecomposeArgs d;
    auto * dec = app.add_subcommand("decompose", "Run the pebbling algorithm on a host graph");
    dec->add_option("--input,-i", d.input, "Host graph file, - for stdin")->required();
    dec->add_option("--t", d.t, "Pathwidth parameter")->required()->check(CLI::NonNegativeNumber);
    dec->add_option("--guest", d.guest, "obstruction, complete, or a flag-set file")->capture_default_str();
    dec->add_option("--relabel", d.relabel, "Relabel rule")->check(CLI::IsMember({"shift", "expand"}))
        ->capture_default_str();
    dec->add_option("--strategy", d.strategy, "Removal choice")
        ->check(CLI::IsMember({"deepest", "lowest-label"}))->capture_default_str();
    dec->add_option("--seed", d.seed, "Randomise root placement");
    dec->add_option("--trace", d.trace, "Write newline-delimited JSON events here");
    format_option(dec, d.format);

    VerifyArgs v;
    auto * ver = app.add_subcommand("verify", "Check a decomposition or an embedding certificate");
    ver->add_option("--graph,--input", v.graph, "Host graph file")->required();
    ver->add_option("--decomposition", v.decomposition, "JSON bags, or a decompose report");
    ver->add_option("--certificate", v.certificate, "JSON certificate, or a decompose report");
    ver->add_option("--guest", v.guest, "Guest graph file; defaults to the tree on the certificate labels");
    format_option(ver, v.format);

    std::string oracle_graph, oracle_format = "auto";
    bool force = false;
    auto * ora = app.add_subcommand("oracle", "Exact pathwidth of a small graph");
    ora->add_option("--graph,--input", oracle_graph, "Graph file")->required();
    ora->add_flag("--force", force, "Allow up to 22 vertices");
    format_option(ora, oracle_format);

    ObstructionArgs g;
    auto * gen = app.add_subcommand("gen-obstruction", "List the tree obstructions for pathwidth t");
    gen->add_option("--t", g.t, "0 to 3")->required()->check(CLI::Range(0, 3));
    gen->add_flag("--embed", g.embed, "Add flag sets placing each tree in its guest");
    gen->add_option("--output-dir", g.output_dir, "Write edge-list and flag files instead of JSON trees");
    gen->add_option("--limit", g.limit, "Stop after this many trees");

    BenchArgs b;
    auto * ben = app.add_subcommand("bench", "Time runs and count adjacency touches");
    ben->add_option("--family", b.family, "Host family")
        ->check(CLI::IsMember({"random-tree", "grid-strip", "random-sparse"}))->capture_default_str();
    ben->add_option("--sizes", b.sizes, "Comma-separated vertex counts; none gives an empty table");
    ben->add_option("--t", b.t, "Pathwidth parameter")->capture_default_str();
    ben->add_option("--seed", b.seed, "Generator seed")->capture_default_str();
    ben->add_option("--jobs", b.jobs, "Worker threads")->capture_default_str();

    std::string table;
    auto * self = app.add_subcommand("selftest", "Run the acceptance suite");
    self->add_option("--obstruction-table", table, "Use gen-obstruction reports instead of generating");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e) == 0 ? exit_ok : exit_error;
    }

    try {
        if (*dec)
            return decompose(d);
        if (*ver)
            return verify(v);
        if (*ora)
            return oracle(oracle_graph, oracle_format, force);
        if (*gen)
            return gen_obstruction(g);
        if (*ben)
            return bench(b);
        return selftest(table);
    }
    catch (const std::exception & e) {
        std::cerr << "pathpebble: " << e.what() << '\n';
    }
    return exit_error;
}
