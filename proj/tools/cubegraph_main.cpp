#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cubegraph/cubegraph.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBoundFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

struct CommonFlags {
    std::string format = "text";
    std::string eta_mode = "measured";
    double epsilon = 0.0;
    std::uint64_t budget = 1ull << 28;
    bool skip_bfs = false;
    std::string origin;  // decimal state rank; empty = solved state
};

cubegraph::Integer parse_rank(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty origin rank");
    for (char c : text)
        if (c < '0' || c > '9')
            throw std::invalid_argument("origin rank must be a nonnegative integer");
    return cubegraph::Integer(text);
}

cubegraph::AnalyzeOptions analyze_options(const CommonFlags& flags) {
    cubegraph::AnalyzeOptions opts;
    opts.budget_slots = flags.budget;
    opts.skip_bfs = flags.skip_bfs;
    opts.epsilon = flags.epsilon;
    if (flags.eta_mode == "one") opts.eta_override = 1;
    if (!flags.origin.empty()) opts.origin_rank = parse_rank(flags.origin);
    return opts;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw cubegraph::ParseError("cannot write \"" + out_path + "\"");
    out << text;
}

int run_analyze(int cube_size, const std::string& metric, const CommonFlags& flags) {
    using namespace cubegraph;
    const AnalysisRecord rec =
        analyze_metric(cube_size, parse_metric(metric), analyze_options(flags));
    if (flags.format == "csv")
        std::cout << render_csv({rec});
    else if (flags.format == "json")
        std::cout << render_json(rec);
    else
        std::cout << render_text(rec);
    return kExitOk;
}

int run_table1(const CommonFlags& flags) {
    using namespace cubegraph;
    const std::vector<AnalysisRecord> records = reference_table(analyze_options(flags));
    if (flags.format == "csv")
        std::cout << render_csv(records);
    else if (flags.format == "json")
        std::cout << render_json(records);
    else
        std::cout << render_table_text(records);
    return kExitOk;
}

int run_distance_array(int cube_size, const std::string& metric,
                       const CommonFlags& flags, const std::string& out_path) {
    using namespace cubegraph;
    const CayleyGraph graph(make_metric(cube_size, parse_metric(metric)));
    CubeState origin = graph.origin();
    std::string label = "solved";
    if (!flags.origin.empty()) {
        const Integer rank_value = parse_rank(flags.origin);
        origin = unrank(rank_value, cube_size);
        label = "rank " + rank_value.str();
    }
    DistanceArray da = bfs_distance_array(graph, origin, BfsOptions{flags.budget});
    da.origin = label;
    if (flags.format == "text")
        write_output(render_distance_text(da), out_path);
    else if (flags.format == "json")
        write_output(render_distance_json(da), out_path);
    else
        write_output(render_distance_csv(da), out_path);
    return kExitOk;
}

int run_check_graph(const std::string& path, const CommonFlags& flags) {
    using namespace cubegraph;
    const AdjacencyGraph graph = load_graph_file(path);
    const EtaMode mode =
        flags.eta_mode == "one" ? EtaMode::conservative_one : EtaMode::measured;
    const BoundValidation report = validate_lower_bound(graph, mode);
    if (flags.format == "csv")
        std::cout << render_validation_csv(report, path);
    else if (flags.format == "json")
        std::cout << render_validation_json(report, path);
    else
        std::cout << render_validation_text(report, path);
    return report.holds ? kExitOk : kExitBoundFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cayley-graph diameter analysis for Rubik's Cube turn metrics"};
    app.require_subcommand(1);

    CommonFlags flags;
    int cube_size = 3;
    std::string metric_name = "quarter";
    std::string graph_path;
    std::string out_path;

    auto add_format = [&](CLI::App* cmd) {
        return cmd->add_option("--format", flags.format, "Output format")
            ->check(CLI::IsMember({"text", "csv", "json"}));
    };

    CLI::App* analyze = app.add_subcommand("analyze", "Analyze one cube metric");
    analyze->add_option("cube_size", cube_size, "Cube size (2 or 3)")->required();
    analyze->add_option("metric", metric_name, "quarter | square | square-slice")
        ->required();
    add_format(analyze);
    analyze->add_option("--eta", flags.eta_mode, "Cycle count used in bounds")
        ->check(CLI::IsMember({"measured", "one"}));
    analyze->add_option("--epsilon", flags.epsilon, "Slack for the bv_upper bound");
    analyze->add_option("--budget", flags.budget, "Max states to enumerate");
    analyze->add_flag("--skip-bfs", flags.skip_bfs, "Skip the exact enumeration");
    analyze->add_option("--origin", flags.origin, "BFS origin as a state rank");

    CLI::App* table = app.add_subcommand("table1", "Reference table over all five metrics");
    add_format(table);
    table->add_option("--eta", flags.eta_mode, "Cycle count used in bounds")
        ->check(CLI::IsMember({"measured", "one"}));
    table->add_option("--epsilon", flags.epsilon, "Slack for the bv_upper bound");
    table->add_option("--budget", flags.budget, "Max states to enumerate");
    table->add_flag("--skip-bfs", flags.skip_bfs, "Skip the exact enumeration");

    CLI::App* darray =
        app.add_subcommand("distance-array", "Export the exact distance profile");
    darray->add_option("cube_size", cube_size, "Cube size (2 or 3)")->required();
    darray->add_option("metric", metric_name, "quarter | square | square-slice")
        ->required();
    CLI::Option* darray_format = add_format(darray);
    darray->add_option("--budget", flags.budget, "Max states to enumerate");
    darray->add_option("--origin", flags.origin, "BFS origin as a state rank");
    darray->add_option("--out", out_path, "Write to a file instead of stdout");

    CLI::App* check =
        app.add_subcommand("check-graph", "Validate the diameter bound on an edge list");
    check->add_option("path", graph_path, "Edge-list file")->required();
    add_format(check);
    check->add_option("--eta", flags.eta_mode, "measured | one")
        ->check(CLI::IsMember({"measured", "one"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }
    // the export subcommand is machine-readable by default
    if (*darray && darray_format->count() == 0) flags.format = "csv";

    try {
        if (*analyze) return run_analyze(cube_size, metric_name, flags);
        if (*table) return run_table1(flags);
        if (*darray) return run_distance_array(cube_size, metric_name, flags, out_path);
        if (*check) return run_check_graph(graph_path, flags);
    } catch (const cubegraph::BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const cubegraph::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const cubegraph::UnsupportedGraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "run with --help for usage\n";
        return kExitInputError;
    }
    return kExitInputError;
}
