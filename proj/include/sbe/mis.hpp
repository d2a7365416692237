#ifndef SBE_MIS_HPP
#define SBE_MIS_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "sbe/engine.hpp"

namespace sbe {

enum class Ordering { none, descending, ascending };

const char* to_string(Ordering o);
Ordering ordering_from_string(std::string_view name);

struct SearchStats {
    std::uint64_t delta = 0;                  // split operations performed
    std::vector<std::uint64_t> layer_widths;  // widths of constructed layers
    int mis_depth = 0;                        // depth of first leaf-bearing layer
    int alpha = 0;                            // n - mis_depth
};

struct MisResult {
    std::vector<VertexSubset> mis_sets;       // all maximum independent sets
    SearchStats stats;
};

/// Layer-by-layer search: expands from {V(G)} and stops at the first layer
/// holding an independent node; every independent node there is a maximum
/// independent set. delta counts splits of deduplicated nodes, including the
/// ones that built the final layer.
MisResult find_mis(const Graph& g, std::uint64_t node_budget = default_node_budget);

/// Same search on the degree-reordered graph (when asked); results are mapped
/// back to the original labels, stats reflect the reordered run.
MisResult find_mis_with_ordering(const Graph& g, Ordering ordering,
                                 std::uint64_t node_budget = default_node_budget);

} // namespace sbe

#endif
