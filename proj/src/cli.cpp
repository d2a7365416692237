#include "sbe/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "sbe/bench.hpp"
#include "sbe/closed_forms.hpp"
#include "sbe/coloring.hpp"
#include "sbe/engine.hpp"
#include "sbe/graph.hpp"
#include "sbe/indep_family.hpp"
#include "sbe/mis.hpp"

namespace sbe {

namespace {

constexpr int coloring_vertex_guard = 24;

struct GraphSourceOpts {
    std::string input;
    std::string family;
    int n = 0;
    long long m = -1;
    int d = -1;
    std::uint64_t seed = 0;
};

void add_graph_source(CLI::App* cmd, GraphSourceOpts& o) {
    cmd->add_option("--input", o.input, "graph file (edge list or DIMACS)");
    cmd->add_option("--family", o.family,
                    "generator family: path|cycle|complete|moebius|gnm|regular|apollonian");
    cmd->add_option("--n", o.n, "vertex count");
    cmd->add_option("--m", o.m, "edge count (gnm)");
    cmd->add_option("--d", o.d, "degree (regular)");
    cmd->add_option("--seed", o.seed, "generator seed");
}

Graph resolve_graph(const GraphSourceOpts& o) {
    if (!o.input.empty()) {
        std::ifstream in(o.input);
        if (!in) throw argument_error("cannot open '" + o.input + "'");
        std::ostringstream text;
        text << in.rdbuf();
        return parse_graph(text.str());
    }
    if (o.family.empty()) throw argument_error("need --input or --family");
    GenSpec spec;
    spec.family = family_from_string(o.family);
    spec.n = o.n;
    spec.seed = o.seed;
    if (spec.family == Family::gnm) {
        if (o.m < 0) throw argument_error("gnm needs --m");
        spec.m = o.m;
    }
    if (spec.family == Family::regular) {
        if (o.d < 0) throw argument_error("regular needs --d");
        spec.d = o.d;
    }
    return generate(spec);
}

std::ostream& open_output(const std::string& path, std::ofstream& file, std::ostream& fallback) {
    if (path.empty()) return fallback;
    file.open(path);
    if (!file) throw argument_error("cannot write '" + path + "'");
    return file;
}

void print_widths(std::ostream& out, const std::vector<std::uint64_t>& widths,
                  std::uint64_t total) {
    for (std::size_t l = 0; l < widths.size(); ++l) out << l << ' ' << widths[l] << '\n';
    out << "total " << total << '\n';
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"split-by-edges trees: maximum independent sets, independent-set "
                 "enumeration, graph coloring, and benchmark sweeps"};
    app.require_subcommand(1);

    GraphSourceOpts src;
    std::uint64_t budget = default_node_budget;
    std::string out_path;
    std::string format = "edgelist";
    bool closed_form = false;
    bool recurrence = false;
    bool allow_large = false;
    std::string ordering = "none";
    int k = 0;
    std::string predict_kind;
    int predict_n = 0;

    auto* gen = app.add_subcommand("gen", "generate a graph and write it out");
    add_graph_source(gen, src);
    gen->add_option("--format", format, "edgelist|dimacs");
    gen->add_option("--out", out_path, "output file (default stdout)");

    auto* mis = app.add_subcommand("mis", "find all maximum independent sets");
    add_graph_source(mis, src);
    mis->add_option("--ordering", ordering, "none|descending|ascending");
    mis->add_option("--budget", budget, "node budget");

    auto* sizes = app.add_subcommand("sizes", "SBE and USBE tree sizes");
    add_graph_source(sizes, src);
    sizes->add_flag("--closed-form", closed_form, "use the complete-graph closed forms");
    sizes->add_option("--budget", budget, "node budget");

    auto* layers = app.add_subcommand("layers", "USBE layer width profile");
    add_graph_source(layers, src);
    layers->add_flag("--recurrence", recurrence, "use the path recurrence (paths only)");
    layers->add_option("--budget", budget, "node budget");

    auto* enumerate = app.add_subcommand("enum", "enumerate all independent sets");
    add_graph_source(enumerate, src);
    enumerate->add_option("--budget", budget, "node budget");
    enumerate->add_flag("--allow-large", allow_large, "lift the n guard");

    auto* chromatic = app.add_subcommand("chromatic", "chromatic number and a witness");
    add_graph_source(chromatic, src);
    chromatic->add_option("--budget", budget, "node budget");
    chromatic->add_flag("--allow-large", allow_large, "lift the n guard");

    auto* colorings = app.add_subcommand("colorings", "all k-colorings");
    add_graph_source(colorings, src);
    colorings->add_option("--k", k, "number of classes")->required();
    colorings->add_option("--budget", budget, "node budget");
    colorings->add_flag("--allow-large", allow_large, "lift the n guard");

    SweepConfig sweep;
    std::vector<std::string> sweep_orderings = {"none"};
    std::string sweep_family = "gnm";
    auto* bench = app.add_subcommand("bench", "MIS sweep over random graphs, CSV output");
    bench->add_option("--family", sweep_family, "gnm|moebius");
    bench->add_option("--n", sweep.n, "vertex count (gnm)");
    bench->add_option("--m-from", sweep.m_from, "first edge count");
    bench->add_option("--m-to", sweep.m_to, "last edge count");
    bench->add_option("--m-step", sweep.m_step, "edge count step");
    bench->add_option("--n-from", sweep.n_from, "first n (moebius)");
    bench->add_option("--n-to", sweep.n_to, "last n (moebius)");
    bench->add_option("--n-step", sweep.n_step, "n step (moebius)");
    bench->add_option("--runs", sweep.runs, "runs per cell");
    bench->add_option("--orderings", sweep_orderings, "subset of none,descending,ascending")
        ->delimiter(',');
    bench->add_option("--seed", sweep.base_seed, "base seed");
    bench->add_option("--budget", sweep.node_budget, "per-run node budget");
    bench->add_flag("--summarize", sweep.summarize, "append per-(m,ordering) means");
    bench->add_option("--out", out_path, "output file (default stdout)");

    auto* predict = app.add_subcommand("predict", "closed-form split predictions");
    predict->add_option("--kind", predict_kind, "moebius|random")->required();
    predict->add_option("--n", predict_n, "vertex count")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (gen->parsed()) {
            const Graph g = resolve_graph(src);
            GraphFormat fmt;
            if (format == "edgelist") fmt = GraphFormat::edge_list;
            else if (format == "dimacs") fmt = GraphFormat::dimacs;
            else throw argument_error("unknown format '" + format + "'");
            std::ofstream file;
            open_output(out_path, file, out) << write_graph(g, fmt);
        } else if (mis->parsed()) {
            const Graph g = resolve_graph(src);
            MisResult r = find_mis_with_ordering(g, ordering_from_string(ordering), budget);
            for (const auto& s : r.mis_sets) out << s.to_string() << '\n';
            out << "alpha=" << r.stats.alpha << " delta=" << r.stats.delta
                << " mis_depth=" << r.stats.mis_depth << '\n';
        } else if (sizes->parsed()) {
            if (closed_form) {
                if (src.family != "complete")
                    throw argument_error("--closed-form applies to --family complete");
                out << sbe_size_complete(src.n) << ' ' << usbe_size_complete(src.n) << '\n';
            } else {
                const Graph g = resolve_graph(src);
                out << build_sbe_tree(g, budget).size() << ' '
                    << build_usbe_layers(g, budget).total_size << '\n';
            }
        } else if (layers->parsed()) {
            if (recurrence) {
                if (src.family != "path")
                    throw argument_error("--recurrence applies to --family path");
                WidthProfile profile = path_width_profile(src.n);
                for (std::size_t l = 0; l < profile.widths.size(); ++l)
                    out << l << ' ' << profile.widths[l] << '\n';
                out << "total " << profile.total << '\n';
            } else {
                const Graph g = resolve_graph(src);
                UsbeLayers usbe = build_usbe_layers(g, budget);
                print_widths(out, usbe.layer_widths, usbe.total_size);
            }
        } else if (enumerate->parsed()) {
            const Graph g = resolve_graph(src);
            if (g.vertex_count() > coloring_vertex_guard && !allow_large)
                throw argument_error("enumeration is guarded to n <= " +
                                     std::to_string(coloring_vertex_guard) +
                                     "; pass --allow-large to override");
            out << close_downward(foliage(g, budget)).to_text();
        } else if (chromatic->parsed() || colorings->parsed()) {
            const Graph g = resolve_graph(src);
            if (g.vertex_count() > coloring_vertex_guard && !allow_large)
                throw argument_error("coloring is guarded to n <= " +
                                     std::to_string(coloring_vertex_guard) +
                                     "; pass --allow-large to override");
            if (chromatic->parsed()) {
                ChromaticResult r = chromatic_number(g, budget);
                out << "chi=" << r.k << '\n' << to_text(r.witness);
            } else {
                auto all = all_colorings(g, k, budget);
                for (std::size_t i = 0; i < all.size(); ++i) {
                    out << "coloring " << i + 1 << '\n';
                    out << to_text(all[i]);
                }
                out << "count " << all.size() << '\n';
            }
        } else if (bench->parsed()) {
            sweep.family = family_from_string(sweep_family);
            sweep.orderings.clear();
            for (const auto& name : sweep_orderings)
                sweep.orderings.push_back(ordering_from_string(name));
            std::ofstream file;
            run_sweep(sweep, open_output(out_path, file, out));
        } else if (predict->parsed()) {
            double value;
            if (predict_kind == "moebius") value = moebius_split_prediction(predict_n);
            else if (predict_kind == "random") value = random_split_prediction(predict_n);
            else throw argument_error("unknown prediction kind '" + predict_kind + "'");
            out << std::setprecision(12) << value << '\n';
        }
    } catch (const budget_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_budget;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const argument_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_ok;
}

} // namespace sbe
