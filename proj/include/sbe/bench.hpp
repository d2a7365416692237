#ifndef SBE_BENCH_HPP
#define SBE_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sbe/graph.hpp"
#include "sbe/mis.hpp"

namespace sbe {

inline constexpr const char* sweep_csv_header =
    "n,m,ordering,run,seed,alpha,delta,mis_depth,status";

/// One MIS sweep: for gnm, m runs over [m_from, m_to] step m_step at fixed n;
/// for moebius, n runs over [n_from, n_to] step n_step with m = 3n/2 implied.
/// Per-cell seed is run_seed(base_seed, m, run), so any row reproduces alone.
struct SweepConfig {
    Family family = Family::gnm;
    int n = 24;
    long long m_from = 0;
    long long m_to = 0;
    long long m_step = 1;
    int n_from = 0;                       // moebius sweeps
    int n_to = 0;
    int n_step = 4;
    int runs = 1;
    std::vector<Ordering> orderings = {Ordering::none};
    std::uint64_t base_seed = 1;
    std::uint64_t node_budget = default_node_budget;
    bool summarize = false;
};

/// Emits the CSV header, one row per (cell, run, ordering) in canonical
/// order, and (with summarize) '#'-prefixed per-(m, ordering) mean lines.
/// Budget exhaustion is recorded in the row (status=budget, partial delta),
/// never fatal to the sweep. Byte-identical output for identical configs.
void run_sweep(const SweepConfig& config, std::ostream& out);

std::string run_sweep_to_string(const SweepConfig& config);

} // namespace sbe

#endif
