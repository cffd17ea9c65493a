#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "polytuple/coloring.hpp"
#include "polytuple/combinatorics.hpp"
#include "polytuple/errors.hpp"
#include "polytuple/gen.hpp"
#include "polytuple/hypergraph.hpp"
#include "polytuple/io.hpp"
#include "polytuple/lll.hpp"
#include "polytuple/nets.hpp"
#include "polytuple/points.hpp"
#include "polytuple/ranges.hpp"
#include "polytuple/search.hpp"
#include "polytuple/svg.hpp"

namespace {

using namespace polytuple;
using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool wants_svg(const std::string& path) {
    return path.size() >= 4 && path.compare(path.size() - 4, 4, ".svg") == 0;
}

// Empty path means stdout.
void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        write_text_file(path, text);
    }
}

// All parsed flags in one bag; each subcommand validates the ones it uses.
struct Opts {
    std::string input, output, kind = "disks2d";
    std::string mode;
    std::vector<uint32_t> extents;
    std::string hypergraph_path, coloring_path;
    uint32_t t = 2, k = 2, f = 0, m = 0, dim = 2, n = 0;
    std::string eps, base, c = "126";
    uint64_t seed = 0, max_rounds = 1'000'000;
    uint64_t budget_nodes = uint64_t{1} << 22;
    double budget_seconds = 120.0;
    int64_t bbox = 1'000'000;
    bool seed_set = false, t_set = false, k_set = false, f_set = false;
    bool dim_set = false, base_set = false;
};

PointSet load_points(const std::string& path) {
    return points_from_json(read_text_file(path));
}

Hypergraph load_hypergraph(const std::string& path) {
    return hypergraph_from_json(read_text_file(path));
}

// disks and balls demand certified general position before enumeration.
PointSet load_points_for_kind(const std::string& path, RangeKind kind) {
    PointSet p = load_points(path);
    if (kind == RangeKind::disks2d || kind == RangeKind::balls) p = validated(std::move(p));
    return p;
}

ExitCode run_gen(const Opts& o) {
    PointSet p;
    if (o.mode == "random") {
        if (!o.seed_set) throw input_error("--seed is required for random generation");
        if (o.n == 0) throw input_error("--n must be positive");
        p = gen_random_general_position(o.n, o.dim, o.bbox, o.seed);
    } else if (o.mode == "grid") {
        if (o.extents.empty()) throw input_error("grid mode takes positional extents, e.g. gen grid 24 24");
        p = gen_grid(o.extents);
    } else {
        if (o.n == 0) throw input_error("--n must be positive");
        p = gen_moment_curve(o.n, o.dim);
    }
    write_output(o.output, wants_svg(o.output) ? emit_svg(p) : points_to_json(p));
    return ExitCode::exit_ok;
}

ExitCode run_ranges(const Opts& o) {
    const RangeKind kind = range_kind_from_string(o.kind);
    const PointSet p = load_points_for_kind(o.input, kind);
    const auto start = Clock::now();
    const Hypergraph h = enumerate_ranges(p, kind);
    std::cerr << "ranges: " << h.edges.size() << " edges in " << ms_since(start)
              << " ms\n";
    if (wants_svg(o.output)) {
        // Highlight the largest realized range, witness generator and all.
        std::optional<SvgHighlight> highlight;
        size_t best = 0;
        for (size_t i = 0; i < h.edges.size(); ++i)
            if (h.edges[i].size() > h.edges[best].size()) best = i;
        if (!h.edges.empty())
            highlight = SvgHighlight{h.edges[best],
                                     h.has_generators() ? h.generators[best]
                                                        : std::vector<uint32_t>{},
                                     kind};
        write_output(o.output, emit_svg(p, highlight));
    } else {
        write_output(o.output, hypergraph_to_json(h));
    }
    return ExitCode::exit_ok;
}

ExitCode run_depth(const Opts& o) {
    const std::string text = read_text_file(o.input);
    DepthTable table;
    uint32_t n = 0;
    bool via_points = true;
    PointSet p;
    try {
        p = points_from_json(text);
    } catch (const input_error&) {
        via_points = false;
    }
    const auto start = Clock::now();
    if (via_points) {
        const RangeKind kind = range_kind_from_string(o.kind);
        if (kind == RangeKind::disks2d || kind == RangeKind::balls)
            p = validated(std::move(p));
        n = p.size();
        if (kind == RangeKind::disks2d && o.t == 2) {
            table.n = n;
            table.t = 2;
            table.depths = all_pair_depths_disks(p);
        } else {
            table = tuple_depth_table(enumerate_ranges(p, kind), o.t);
        }
    } else {
        const Hypergraph h = hypergraph_from_json(text);
        n = h.n;
        table = tuple_depth_table(h, o.t);
    }
    std::cerr << "depth: " << table.depths.size() << " tuples in " << ms_since(start)
              << " ms\n";

    Json j;
    j["n"] = n;
    j["t"] = o.t;
    j["depths"] = table.depths;
    size_t best = 0;
    for (size_t i = 0; i < table.depths.size(); ++i)
        if (table.depths[i] > table.depths[best]) best = i;
    if (!table.depths.empty()) {
        std::vector<uint32_t> tuple = first_combination(o.t);
        for (size_t r = 0; r < best; ++r) next_combination(n, tuple);
        j["max"] = Json{{"tuple", tuple}, {"depth", table.depths[best]}};
    }
    write_output(o.output, j.dump());
    return ExitCode::exit_ok;
}

ExitCode run_color(const Opts& o) {
    const RangeKind kind = range_kind_from_string(o.kind);
    const PointSet p = load_points_for_kind(o.input, kind);
    TupleColoring coloring;
    std::vector<ResampleRecord> log;
    bool resampled = false;

    switch (kind) {
        case RangeKind::disks2d: {
            if (o.t_set && o.t != 2) throw input_error("disk coloring fixes t = 2");
            if (o.base_set) {
                DepthTable table{p.size(), 2, all_pair_depths_disks(p)};
                coloring = depth_threshold_coloring(table, o.k, parse_rational(o.base));
            } else {
                coloring = disks_pair_coloring(p, o.k);
            }
            break;
        }
        case RangeKind::balls: {
            const uint32_t arity = balls_tuple_arity(p.dim);
            if (o.t_set && o.t != arity)
                throw input_error("ball coloring fixes t by the dimension");
            if (o.base_set) {
                DepthTable table = tuple_depth_table(enumerate_ranges(p, kind), arity);
                coloring = depth_threshold_coloring(table, o.k, parse_rational(o.base));
            } else {
                coloring = balls_tuple_coloring(p, o.k);
            }
            break;
        }
        case RangeKind::intervals1d: {
            coloring = interval_colorer(p, o.t).make(o.k);
            break;
        }
        case RangeKind::rects2d:
        case RangeKind::boxes: {
            if (!o.seed_set) throw input_error("--seed is required for resampling");
            LLLParams params;
            params.k = o.k;
            params.t = o.t;
            params.c = parse_rational(o.c);
            params.m = o.m;
            params.seed = o.seed;
            params.max_rounds = o.max_rounds;
            LLLResult result;
            if (kind == RangeKind::rects2d && o.t == 2) {
                params.shape = LLLShape::rectangles2d;
                result = lll_grid_pair_coloring(p, params);
            } else {
                params.shape = LLLShape::boxes;
                result = lll_tuple_coloring(p, params);
            }
            std::cerr << "color: " << result.event_count << " events, "
                      << result.rounds << " resampling rounds, window m = "
                      << result.m << "\n";
            coloring = std::move(result.coloring);
            log = std::move(result.log);
            resampled = true;
            break;
        }
        default:
            throw input_error("no direct colorer for kind " + o.kind);
    }

    write_output(o.output, coloring_to_json(coloring));
    if (resampled && !o.output.empty())
        write_text_file(o.output + ".log", resample_log_to_text(log));
    return ExitCode::exit_ok;
}

ExitCode run_verify(const Opts& o) {
    if (!o.f_set) throw input_error("--f is required");
    const Hypergraph h = load_hypergraph(o.hypergraph_path);
    const TupleColoring coloring = coloring_from_json(read_text_file(o.coloring_path));
    const VerificationReport report = verify_polychromatic(h, coloring, o.f);
    write_output(o.output, report_to_json(report));
    return report.ok ? ExitCode::exit_ok : ExitCode::exit_violations;
}

ExitCode run_exactf(const Opts& o) {
    const Hypergraph h = load_hypergraph(o.input);
    SearchBudget budget;
    budget.max_nodes = o.budget_nodes;
    budget.time_limit_seconds = o.budget_seconds;
    const ExactFResult result = exact_f(h, o.t, o.k, budget);
    Json j;
    j["status"] = result.status == SearchStatus::found ? "found" : "indeterminate";
    if (result.status == SearchStatus::found) j["f"] = result.f;
    j["nodes"] = result.nodes;
    write_output(o.output, j.dump());
    return result.status == SearchStatus::found ? ExitCode::exit_ok
                                                : ExitCode::exit_indeterminate;
}

ExitCode run_nets(const Opts& o) {
    if (o.eps.empty()) throw input_error("--eps is required");
    const PointSet p = load_points(o.input);
    const Hypergraph h = enumerate_ranges(p, RangeKind::intervals1d);
    const NetDecomposition nets =
        decompose_into_nets(h, o.t, parse_rational(o.eps), interval_colorer(p, o.t));
    std::cerr << "nets: " << nets.k << " disjoint classes\n";
    write_output(o.output, decomposition_to_json(nets));
    return ExitCode::exit_ok;
}

ExitCode run_vc(const Opts& o) {
    const Hypergraph h = load_hypergraph(o.input);
    if (o.k_set) {
        write_output(o.output, coloring_to_json(vc_tuple_coloring(h, o.dim, o.k)));
        return ExitCode::exit_ok;
    }
    // Exhaustive shattering is exponential in the dimension; the node budget
    // caps how many candidate subsets get examined.
    VcBudget budget;
    budget.subset_budget = o.budget_nodes;
    std::cerr << "vc: scanning up to " << budget.subset_budget << " candidate subsets over "
              << h.edges.size() << " edges\n";
    Json j;
    j["vc_dimension"] = vc_dimension(h, budget);
    j["sauer_shelah_ok"] = sauer_shelah_check(h, budget);
    j["shrinkable"] = is_shrinkable(h);
    write_output(o.output, j.dump());
    return ExitCode::exit_ok;
}

ExitCode run_bench(const Opts& o) {
    if (!o.seed_set) throw input_error("--seed is required");
    if (o.n == 0) throw input_error("--n must be positive");
    const RangeKind kind = range_kind_from_string(o.kind);
    uint32_t dim = o.dim;
    if (!o.dim_set) {
        if (kind == RangeKind::intervals1d) dim = 1;
        else if (kind == RangeKind::balls || kind == RangeKind::boxes) dim = 3;
        else dim = 2;
    }
    auto start = Clock::now();
    const PointSet p = gen_random_general_position(o.n, dim, o.bbox, o.seed);
    const double gen_ms = ms_since(start);

    start = Clock::now();
    const Hypergraph h = enumerate_ranges(p, kind);
    const double enumerate_ms = ms_since(start);

    const uint32_t t = o.t_set ? o.t
                      : kind == RangeKind::balls ? balls_tuple_arity(dim)
                                                 : 2;
    start = Clock::now();
    const DepthTable table = tuple_depth_table(h, t);
    const double depth_ms = ms_since(start);
    int64_t max_depth = 0;
    for (const int64_t d : table.depths) max_depth = std::max(max_depth, d);

    Json j;
    j["kind"] = o.kind;
    j["n"] = o.n;
    j["dim"] = dim;
    j["edges"] = h.edges.size();
    j["t"] = t;
    j["max_depth"] = max_depth;
    j["gen_ms"] = gen_ms;
    j["enumerate_ms"] = enumerate_ms;
    j["depth_ms"] = depth_ms;
    write_output(o.output, j.dump());
    return ExitCode::exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polychromatic tuple coloring toolkit"};
    app.require_subcommand(1);
    Opts o;

    const std::vector<std::string> kinds = {"disks2d",  "balls", "halfplanes2d",
                                            "rects2d",  "boxes", "squares2d",
                                            "intervals1d"};

    auto* gen = app.add_subcommand("gen", "generate point sets");
    gen->add_option("mode", o.mode, "random | grid | moment")
        ->required()
        ->check(CLI::IsMember({"random", "grid", "moment"}));
    gen->add_option("extents", o.extents, "grid extents, one per axis");
    gen->add_option("--n", o.n, "point count");
    gen->add_option("--dim", o.dim, "dimension");
    gen->add_option("--bbox", o.bbox, "coordinate half-width");
    gen->add_option("--seed", o.seed, "RNG seed (mandatory for random)");
    gen->add_option("--output", o.output, "output path (.svg plots instead)");

    auto* ranges = app.add_subcommand("ranges", "enumerate realized ranges");
    ranges->add_option("--input", o.input, "points JSON")->required();
    ranges->add_option("--kind", o.kind, "range family")
        ->check(CLI::IsMember(kinds));
    ranges->add_option("--output", o.output, "output path (.svg plots instead)");

    auto* depth = app.add_subcommand("depth", "tuple depth tables");
    depth->add_option("--input", o.input, "points or hypergraph JSON")->required();
    depth->add_option("--kind", o.kind, "range family for point inputs")
        ->check(CLI::IsMember(kinds));
    depth->add_option("--t", o.t, "tuple arity");
    depth->add_option("--output", o.output, "output path");

    auto* color = app.add_subcommand("color", "build polychromatic colorings");
    color->add_option("--input", o.input, "points JSON")->required();
    color->add_option("--kind", o.kind, "range family")
        ->check(CLI::IsMember(kinds));
    color->add_option("--t", o.t, "tuple arity");
    color->add_option("--k", o.k, "color count");
    color->add_option("--base", o.base, "override the depth threshold base");
    color->add_option("--c", o.c, "resampling constant");
    color->add_option("--m", o.m, "resampling window floor (0 derives it)");
    color->add_option("--seed", o.seed, "RNG seed (mandatory for resampling)");
    color->add_option("--max-rounds", o.max_rounds, "resampling round cap");
    color->add_option("--output", o.output, "coloring path (resample log at PATH.log)");

    auto* verify = app.add_subcommand("verify", "check a coloring against a hypergraph");
    verify->add_option("hypergraph", o.hypergraph_path, "hypergraph JSON")->required();
    verify->add_option("coloring", o.coloring_path, "coloring JSON")->required();
    verify->add_option("--f", o.f, "edge size floor");
    verify->add_option("--output", o.output, "report path");

    auto* exactf = app.add_subcommand("exactf", "least feasible f by complete search");
    exactf->add_option("--input", o.input, "hypergraph JSON")->required();
    exactf->add_option("--t", o.t, "tuple arity");
    exactf->add_option("--k", o.k, "color count");
    exactf->add_option("--budget-nodes", o.budget_nodes, "search node cap");
    exactf->add_option("--budget-seconds", o.budget_seconds, "search time cap");
    exactf->add_option("--output", o.output, "result path");

    auto* nets = app.add_subcommand("nets", "decompose tuples into eps-t-nets");
    nets->add_option("--input", o.input, "1-D points JSON")->required();
    nets->add_option("--t", o.t, "tuple arity");
    nets->add_option("--eps", o.eps, "range size fraction, e.g. 0.3 or 3/10");
    nets->add_option("--output", o.output, "decomposition path");

    auto* vc = app.add_subcommand("vc", "VC dimension reports and colorings");
    vc->add_option("--input", o.input, "hypergraph JSON")->required();
    vc->add_option("--dim", o.dim, "VC dimension bound for coloring");
    vc->add_option("--k", o.k, "color count (omit for the report)");
    vc->add_option("--budget-nodes", o.budget_nodes, "candidate subset cap");
    vc->add_option("--output", o.output, "output path");

    auto* bench = app.add_subcommand("bench", "time generation, enumeration, depth");
    bench->add_option("--kind", o.kind, "range family")
        ->check(CLI::IsMember(kinds));
    bench->add_option("--n", o.n, "point count");
    bench->add_option("--dim", o.dim, "dimension (default chosen by kind)");
    bench->add_option("--bbox", o.bbox, "coordinate half-width");
    bench->add_option("--seed", o.seed, "RNG seed");
    bench->add_option("--t", o.t, "tuple arity");
    bench->add_option("--output", o.output, "timings path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(ExitCode::exit_input);
    }

    o.seed_set = gen->count("--seed") || color->count("--seed") || bench->count("--seed");
    o.t_set = color->count("--t") || bench->count("--t");
    o.k_set = vc->count("--k");
    o.f_set = verify->count("--f");
    o.dim_set = bench->count("--dim");
    o.base_set = color->count("--base");

    try {
        ExitCode code = ExitCode::exit_ok;
        if (gen->parsed()) code = run_gen(o);
        else if (ranges->parsed()) code = run_ranges(o);
        else if (depth->parsed()) code = run_depth(o);
        else if (color->parsed()) code = run_color(o);
        else if (verify->parsed()) code = run_verify(o);
        else if (exactf->parsed()) code = run_exactf(o);
        else if (nets->parsed()) code = run_nets(o);
        else if (vc->parsed()) code = run_vc(o);
        else if (bench->parsed()) code = run_bench(o);
        return static_cast<int>(code);
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::exit_input);
    } catch (const nontermination_error& e) {
        std::cerr << "gave up after " << e.rounds << " rounds: " << e.what() << '\n';
        return static_cast<int>(ExitCode::exit_resource);
    } catch (const resource_error& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return static_cast<int>(ExitCode::exit_resource);
    } catch (const certification_error& e) {
        std::cerr << "certification failed: " << e.what() << '\n';
        return static_cast<int>(ExitCode::exit_violations);
    }
}
