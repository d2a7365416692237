#ifndef SBE_ORACLE_HPP
#define SBE_ORACLE_HPP

#include <vector>

#include "sbe/coloring.hpp"
#include "sbe/indep_family.hpp"

namespace sbe {

// Exhaustive baselines, deliberately independent of the tree machinery.
// Hard n-guards keep accidental exponential blowups out of CI.

/// Scans all 2^n subsets (n <= 24) and buckets the nonempty independent ones.
IndependentFamily brute_all_independent_sets(const Graph& g);

struct BruteMis {
    int alpha = 0;
    std::vector<VertexSubset> sets; // every maximum independent set
};
BruteMis brute_mis(const Graph& g);

/// All maximal independent sets (not extendable by any vertex), n <= 24.
std::vector<VertexSubset> brute_maximal_independent_sets(const Graph& g);

struct BruteChromatic {
    int chi = 0;
    std::vector<Coloring> partitions; // every optimal partition, canonicalized
};
/// Exhaustive partition search, n <= 12.
BruteChromatic brute_chromatic(const Graph& g);

} // namespace sbe

#endif
