#ifndef SBE_COLORING_HPP
#define SBE_COLORING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sbe/indep_family.hpp"

namespace sbe {

/// Candidate class-size profile for a k-coloring: k parts in [1, mu],
/// non-increasing, summing to n.
using PartitionSpec = std::vector<int>;

/// All such profiles, each emitted once, ordered lexicographically
/// descending. Empty when infeasible.
std::vector<PartitionSpec> add_up_sets(int n, int k, int mu);

/// A partition of V(G) into independent classes, canonicalized: classes
/// ordered by decreasing size, then lexicographically.
struct Coloring {
    std::vector<VertexSubset> classes;

    friend bool operator==(const Coloring&, const Coloring&) = default;
    friend bool operator<(const Coloring& a, const Coloring& b) {
        return a.classes < b.classes;
    }
};

Coloring make_coloring(std::vector<VertexSubset> classes);
std::string to_text(const Coloring& c);

/// Backtracking match-search through the bucket lists named by spec: extends
/// a set of pairwise disjoint classes one bucket at a time, backing up when a
/// bucket has no match. First complete k-tuple wins; disjointness plus the
/// spec summing to n make it a partition of V.
std::optional<Coloring> find_coloring_for_spec(const IndependentFamily& family,
                                               const PartitionSpec& spec);

struct ChromaticResult {
    int k = 0;
    Coloring witness;
};

/// Iterates k = ceil(n/mu), ceil(n/mu)+1, ... over every add-up set until a
/// coloring exists. The family is the downward closure of the foliage.
ChromaticResult chromatic_number(const Graph& g,
                                 std::uint64_t node_budget = default_node_budget);

/// Every k-coloring of g, as unordered partitions, each exactly once.
std::vector<Coloring> all_colorings(const Graph& g, int k,
                                    std::uint64_t node_budget = default_node_budget);
std::vector<Coloring> all_colorings(const IndependentFamily& family, int n, int k);

} // namespace sbe

#endif
