#include "sbe/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>

#include "sbe/rng.hpp"

namespace sbe {

namespace {

struct Cell {
    int n;
    long long m;
};

std::vector<Cell> sweep_cells(const SweepConfig& c) {
    std::vector<Cell> cells;
    if (c.family == Family::gnm) {
        const long long pairs = (long long)c.n * (c.n - 1) / 2;
        if (c.m_from < 0 || c.m_to > pairs || c.m_from > c.m_to)
            throw argument_error("sweep m range must lie in [0, " + std::to_string(pairs) + "]");
        if (c.m_step < 1) throw argument_error("m_step must be >= 1");
        for (long long m = c.m_from; m <= c.m_to; m += c.m_step) cells.push_back({c.n, m});
    } else if (c.family == Family::moebius) {
        if (c.n_from < 4 || c.n_from > c.n_to || c.n_step < 1 || c.n_step % 2 != 0)
            throw argument_error("moebius sweep needs 4 <= n_from <= n_to and even n_step");
        for (int n = c.n_from; n <= c.n_to; n += c.n_step)
            cells.push_back({n, 3LL * n / 2});
    } else {
        throw argument_error("sweep supports families gnm and moebius");
    }
    return cells;
}

std::vector<Ordering> canonical_orderings(const std::vector<Ordering>& requested) {
    if (requested.empty()) throw argument_error("sweep needs at least one ordering");
    std::vector<Ordering> out;
    for (Ordering o : {Ordering::none, Ordering::descending, Ordering::ascending})
        if (std::find(requested.begin(), requested.end(), o) != requested.end())
            out.push_back(o);
    return out;
}

std::string format_mean(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    return buf;
}

struct MeanAccum {
    std::uint64_t count = 0;
    double alpha = 0, delta = 0, depth = 0;
};

} // namespace

void run_sweep(const SweepConfig& config, std::ostream& out) {
    if (config.runs < 1) throw argument_error("sweep needs runs >= 1");
    const auto cells = sweep_cells(config);
    const auto orderings = canonical_orderings(config.orderings);

    out << sweep_csv_header << '\n';
    std::map<std::pair<long long, Ordering>, MeanAccum> means;

    for (const auto& cell : cells) {
        for (int run = 0; run < config.runs; ++run) {
            const std::uint64_t seed =
                run_seed(config.base_seed, (std::uint64_t)cell.m, (std::uint64_t)run);
            GenSpec spec;
            spec.family = config.family;
            spec.n = cell.n;
            spec.m = cell.m;
            spec.seed = seed;
            const Graph g = generate(spec);

            for (Ordering ordering : orderings) {
                out << cell.n << ',' << cell.m << ',' << to_string(ordering) << ',' << run
                    << ',' << seed << ',';
                try {
                    MisResult r = find_mis_with_ordering(g, ordering, config.node_budget);
                    out << r.stats.alpha << ',' << r.stats.delta << ',' << r.stats.mis_depth
                        << ",ok\n";
                    auto& acc = means[{cell.m, ordering}];
                    ++acc.count;
                    acc.alpha += r.stats.alpha;
                    acc.delta += (double)r.stats.delta;
                    acc.depth += r.stats.mis_depth;
                } catch (const budget_error& e) {
                    out << ',' << e.splits_done() << ",,budget\n";
                }
            }
        }
    }

    if (config.summarize) {
        for (const auto& [key, acc] : means) {
            out << "# summary m=" << key.first << " ordering=" << to_string(key.second)
                << " runs_ok=" << acc.count
                << " mean_alpha=" << format_mean(acc.alpha / acc.count)
                << " mean_delta=" << format_mean(acc.delta / acc.count)
                << " mean_mis_depth=" << format_mean(acc.depth / acc.count) << '\n';
        }
    }
}

std::string run_sweep_to_string(const SweepConfig& config) {
    std::ostringstream out;
    run_sweep(config, out);
    return out.str();
}

} // namespace sbe
