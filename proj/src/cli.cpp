#include "ramsey/cli.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>

#include "CLI11.hpp"
#include "ramsey/canon.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/parallel.hpp"

namespace ramsey {

namespace {

int workers_of(const CommonOptions& opt) {
    return opt.workers > 0 ? opt.workers : default_workers();
}

std::vector<Graph> read_input_sharded(const CommonOptions& opt) {
    std::vector<Graph> all = read_graph6_file(opt.in_path);
    if (opt.shard_count <= 1) return all;
    if (opt.shard_index < 0 || opt.shard_index >= opt.shard_count)
        throw std::runtime_error("shard index out of range");
    std::vector<Graph> mine;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (int(i % std::size_t(opt.shard_count)) == opt.shard_index) mine.push_back(all[i]);
    return mine;
}

// Write sorted unique lines, return the count table; counts go to stdout
// (stderr when the graph lines themselves go to stdout).
CountTable finish_output(CanonSink& sink, const CommonOptions& opt) {
    CountTable counts;
    std::ofstream file;
    std::ostream* lines = &std::cout;
    if (!opt.out_path.empty()) {
        file.open(opt.out_path, std::ios::binary | std::ios::trunc);
        if (!file) throw std::runtime_error("cannot open output " + opt.out_path);
        lines = &file;
    }
    sink.for_each_sorted([&](const std::string& line) {
        auto [n, e] = graph6_line_stats(line);
        counts.add(n, e);
        *lines << line << "\n";
    });
    std::ostream& report = opt.out_path.empty() ? std::cerr : std::cout;
    counts.print(report);
    return counts;
}

void write_run_manifest(const CommonOptions& opt, const std::string& command,
                        const std::vector<std::pair<std::string, std::string>>& extra,
                        const CountTable& counts) {
    if (opt.out_path.empty()) return;
    std::vector<std::pair<std::string, std::string>> fields{
        {"tool", kToolVersion}, {"command", command}, {"input", opt.in_path}};
    fields.insert(fields.end(), extra.begin(), extra.end());
    if (opt.shard_count > 1)
        fields.emplace_back("shard", std::to_string(opt.shard_index) + "/" +
                                         std::to_string(opt.shard_count));
    write_manifest(opt.out_path + ".manifest", fields, counts);
}

struct Progress {
    std::atomic<std::size_t> done{0};
    std::size_t total;
    explicit Progress(std::size_t t) : total(t) {}
    void tick() {
        std::size_t d = ++done;
        if (d % 5000 == 0) std::cerr << "  ... " << d << "/" << total << " inputs\r";
    }
};

}  // namespace

int cmd_extend(const ExtendOptions& opt) {
    std::vector<Graph> inputs = read_input_sharded(opt);
    CanonSink sink(opt.memory_cap_mb << 20);
    std::mutex sink_mutex;
    Progress progress(inputs.size());
    parallel_for(inputs.size(), workers_of(opt), [&](std::size_t i, int) {
        std::vector<std::string> local;
        one_point_extensions_each(inputs[i], opt.t, opt.max_edges, [&](const Graph& h) {
            local.push_back(graph6_encode(relabel(h, canonical_labelling(h))));
        });
        std::lock_guard<std::mutex> lock(sink_mutex);
        for (auto& line : local) sink.insert(std::move(line));
        progress.tick();
    });
    CountTable counts = finish_output(sink, opt);
    std::string cap = opt.max_edges ? std::to_string(*opt.max_edges) : "none";
    write_run_manifest(
        opt, "extend",
        {{"t", std::to_string(opt.t)},
         {"max_edges", cap},
         {"completeness",
          "complete for R(3," + std::to_string(opt.t) + ",n+1,e<=" + cap +
              ") provided the input is the complete R(3," + std::to_string(opt.t) +
              ",n,e<=" + cap + "): a minimum-degree vertex deletion stays within the cap"}},
        counts);
    return 0;
}

int cmd_glue(const GlueOptions& opt) {
    std::vector<Graph> cores = read_input_sharded(opt);
    const int d_max = opt.d_max < 0 ? opt.t : opt.d_max;
    CanonSink sink(opt.memory_cap_mb << 20);
    std::mutex sink_mutex;
    Progress progress(cores.size());
    parallel_for(cores.size(), workers_of(opt), [&](std::size_t i, int) {
        std::vector<std::string> local;
        for (int d = opt.d_min; d <= d_max; ++d) {
            GluingProblem problem{cores[i], d, opt.t, opt.max_edges, opt.min_degree};
            for (auto& [line, g] : glue(problem)) local.push_back(line);
        }
        std::lock_guard<std::mutex> lock(sink_mutex);
        for (auto& line : local) sink.insert(std::move(line));
        progress.tick();
    });
    CountTable counts = finish_output(sink, opt);
    write_run_manifest(opt, "glue",
                       {{"t", std::to_string(opt.t)},
                        {"d_min", std::to_string(opt.d_min)},
                        {"d_max", std::to_string(d_max)},
                        {"max_edges", opt.max_edges ? std::to_string(*opt.max_edges) : "none"},
                        {"min_degree", opt.min_degree ? std::to_string(*opt.min_degree) : "none"}},
                       counts);
    return 0;
}

int cmd_pairglue(const PairGlueOptions& opt) {
    std::ifstream plan_file(opt.plan_path);
    if (!plan_file) throw std::runtime_error("cannot open plan " + opt.plan_path);
    std::vector<PlanLine> plan = parse_plan(plan_file);
    std::vector<Graph> pool = read_input_sharded(opt);

    CanonSink sink(opt.memory_cap_mb << 20);
    std::mutex sink_mutex;
    for (const PlanLine& line : plan) {
        std::vector<Graph> cores;
        for (const Graph& g : pool)
            if (line.core_class.matches(g)) cores.push_back(g);
        std::cerr << "plan: core class " << line.core_class.to_string() << " -> " << cores.size()
                  << " cores\n";
        parallel_for(cores.size(), workers_of(opt), [&](std::size_t i, int) {
            PairGlueProblem problem{cores[i], opt.target_t, opt.target_n, opt.target_degree, {}};
            CanonicalGraphSet found = pair_glue(problem, line.exclude);
            std::lock_guard<std::mutex> lock(sink_mutex);
            for (auto& [form, g] : found) sink.insert(form);
        });
    }
    CountTable counts = finish_output(sink, opt);
    write_run_manifest(opt, "pairglue",
                       {{"target_t", std::to_string(opt.target_t)},
                        {"target_n", std::to_string(opt.target_n)},
                        {"target_degree", std::to_string(opt.target_degree)},
                        {"plan", opt.plan_path}},
                       counts);
    return 0;
}

int cmd_verify(const VerifyOptions& opt) {
    std::ifstream in(opt.in_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + opt.in_path);
    CensusSpec spec{opt.s, opt.t, opt.n, opt.max_edges};
    VerifyReport report = verify_stream(in, spec);
    for (const VerifyIssue& issue : report.issues)
        std::cerr << opt.in_path << ":" << issue.line_number << ": " << issue.message << "\n";
    report.counts.print(std::cout);
    if (!report.pass()) return 1;

    if (opt.extend_check_order) {
        if (*opt.extend_check_order <= opt.n)
            throw std::runtime_error("--extend-check order must exceed the file's order");
        std::vector<Graph> graphs = read_graph6_file(opt.in_path);
        CensusSpec target{3, opt.t, *opt.extend_check_order, {}};
        CensusResult up = census(target, graphs, workers_of(opt));
        for (auto& [order, count] : up.level_counts)
            if (order > opt.n) std::cout << "extend-check n=" << order << ": " << count << "\n";
        if (!up.graphs.empty()) {
            std::cerr << "extend-check failed: " << up.graphs.size() << " graphs reach n="
                      << *opt.extend_check_order << "\n";
            return 1;
        }
    }
    return 0;
}

int cmd_canon(const CanonOptions& opt) {
    std::ifstream in(opt.in_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + opt.in_path);
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!opt.out_path.empty()) {
        file.open(opt.out_path, std::ios::binary | std::ios::trunc);
        if (!file) throw std::runtime_error("cannot open output " + opt.out_path);
        out = &file;
    }
    if (opt.dedup) {
        DedupResult result = dedup_stream(in, *out, opt.memory_cap_mb << 20);
        std::ostream& report = opt.out_path.empty() ? std::cerr : std::cout;
        report << "read " << result.lines_in << ", unique " << result.lines_out << "\n";
        result.counts.print(report);
    } else {
        for_each_graph6_line(in, [&](std::size_t lineno, const std::string& line) {
            try {
                Graph g = graph6_decode(line);
                *out << graph6_encode(relabel(g, canonical_labelling(g))) << "\n";
            } catch (const Graph6Error& e) {
                throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
            }
        });
    }
    return 0;
}

int cmd_census_stats(const StatsOptions& opt) {
    std::ifstream in(opt.in_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + opt.in_path);
    CountTable counts;
    for_each_graph6_line(in, [&](std::size_t lineno, const std::string& line) {
        try {
            auto [n, e] = graph6_line_stats(line);
            counts.add(n, e);
        } catch (const Graph6Error& e) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    });
    counts.print(std::cout);
    return 0;
}

namespace {

void add_common(CLI::App* cmd, CommonOptions& opt, bool needs_input = true) {
    auto* in = cmd->add_option("--in", opt.in_path, "input graph6 file");
    if (needs_input) in->required();
    cmd->add_option("--out", opt.out_path, "output file (default: stdout)");
    cmd->add_option("--workers", opt.workers, "worker threads (default: hardware)");
    cmd->add_option("--memory-cap", opt.memory_cap_mb, "dedup memory cap in MiB");
    cmd->add_option_function<std::string>(
        "--shard",
        [&opt](const std::string& text) {
            auto slash = text.find('/');
            if (slash == std::string::npos) throw CLI::ValidationError("--shard expects I/K");
            opt.shard_index = std::stoi(text.substr(0, slash));
            opt.shard_count = std::stoi(text.substr(slash + 1));
            if (opt.shard_count < 1 || opt.shard_index < 0 || opt.shard_index >= opt.shard_count)
                throw CLI::ValidationError("--shard index out of range");
        },
        "process shard I of K (0-based)");
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Ramsey graph census toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    ExtendOptions extend_opt;
    auto* extend = app.add_subcommand("extend", "one-point extensions of every input graph");
    add_common(extend, extend_opt);
    extend->add_option("--t", extend_opt.t, "independence bound t")->required();
    extend->add_option("--max-edges", extend_opt.max_edges, "edge cap on outputs");

    GlueOptions glue_opt;
    auto* glue_cmd = app.add_subcommand("glue", "neighbourhood gluing over input cores");
    add_common(glue_cmd, glue_opt);
    glue_cmd->add_option("--t", glue_opt.t, "core independence bound t (target R(3,t+1))")
        ->required();
    glue_cmd->add_option("--d-min", glue_opt.d_min, "minimum apex degree");
    glue_cmd->add_option("--d-max", glue_opt.d_max, "maximum apex degree (default t)");
    glue_cmd->add_option("--max-edges", glue_opt.max_edges, "edge cap on outputs");
    glue_cmd->add_option("--min-degree", glue_opt.min_degree, "degree floor on outputs");

    PairGlueOptions pair_opt;
    auto* pair = app.add_subcommand("pairglue", "regular-target pair gluing per plan file");
    add_common(pair, pair_opt);
    pair->add_option("--t", pair_opt.target_t, "target independence bound")->required();
    pair->add_option("--n", pair_opt.target_n, "target order")->required();
    pair->add_option("--d-reg", pair_opt.target_degree, "target regular degree")->required();
    pair->add_option("--plan", pair_opt.plan_path, "plan file")->required();

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "check a census file against its spec");
    add_common(verify, verify_opt);
    verify->add_option("--s", verify_opt.s, "clique bound (default 3)");
    verify->add_option("--t", verify_opt.t, "independence bound")->required();
    verify->add_option("--n", verify_opt.n, "graph order")->required();
    verify->add_option("--max-edges", verify_opt.max_edges, "edge cap");
    verify->add_option("--extend-check", verify_opt.extend_check_order,
                       "assert no input extends to this order");

    CanonOptions canon_opt;
    auto* canon = app.add_subcommand("canon", "canonicalize graph6 lines");
    add_common(canon, canon_opt);
    canon->add_flag("--dedup", canon_opt.dedup, "deduplicate and sort");

    StatsOptions stats_opt;
    auto* stats = app.add_subcommand("census-stats", "per-(n,e) counts of a graph6 file");
    add_common(stats, stats_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (extend->parsed()) return cmd_extend(extend_opt);
        if (glue_cmd->parsed()) return cmd_glue(glue_opt);
        if (pair->parsed()) return cmd_pairglue(pair_opt);
        if (verify->parsed()) return cmd_verify(verify_opt);
        if (canon->parsed()) return cmd_canon(canon_opt);
        if (stats->parsed()) return cmd_census_stats(stats_opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace ramsey
