#ifndef SBE_TESTS_FIXTURES_HPP
#define SBE_TESTS_FIXTURES_HPP

#include <cstdint>
#include <vector>

#include "sbe/graph.hpp"
#include "sbe/rng.hpp"

namespace fixtures {

// 12-vertex reference graph given by its adjacency table (33 edges).
inline const std::vector<std::vector<int>>& twelve_vertex_rows() {
    static const std::vector<std::vector<int>> rows = {
        {2, 3, 4, 5, 6, 7, 8},
        {1, 4, 5, 9, 11},
        {1, 8, 9, 11},
        {1, 2, 6, 8, 9, 11},
        {1, 2, 7, 8, 11, 12},
        {1, 4, 7, 10, 12},
        {1, 5, 6, 8},
        {1, 3, 4, 5, 7, 9, 10, 12},
        {2, 3, 4, 8, 11},
        {6, 8, 11, 12},
        {2, 3, 4, 5, 9, 10, 12},
        {5, 6, 8, 10, 11},
    };
    return rows;
}

inline sbe::Graph twelve_vertex_graph() {
    std::vector<sbe::Edge> edges;
    const auto& rows = twelve_vertex_rows();
    for (int u = 1; u <= (int)rows.size(); ++u)
        for (int v : rows[u - 1])
            if (u < v) edges.push_back({u, v});
    return sbe::Graph::from_edges((int)rows.size(), std::move(edges));
}

// Expected degree mappings (old label -> new label), index 0 unused.
inline const std::vector<int>& twelve_vertex_descending_forward() {
    static const std::vector<int> fwd = {0, 2, 6, 10, 4, 5, 7, 11, 1, 8, 12, 3, 9};
    return fwd;
}

inline const std::vector<int>& twelve_vertex_ascending_forward() {
    static const std::vector<int> fwd = {0, 10, 4, 1, 8, 9, 5, 2, 12, 6, 3, 11, 7};
    return fwd;
}

// Deterministic batch of seeded gnm graphs: n in [n_min, n_max], m uniform
// over [0, C(n,2)], all derived from the batch salt and the index.
inline sbe::Graph seeded_gnm(std::uint64_t salt, int index, int n_min, int n_max) {
    const std::uint64_t h = sbe::splitmix64(salt ^ (std::uint64_t)index * 0x9e3779b97f4a7c15ULL);
    const int n = n_min + (int)(h % (std::uint64_t)(n_max - n_min + 1));
    const long long pairs = (long long)n * (n - 1) / 2;
    const std::uint64_t h2 = sbe::splitmix64(h);
    const long long m = pairs == 0 ? 0 : (long long)(h2 % (std::uint64_t)(pairs + 1));
    return sbe::gnm_graph(n, m, sbe::splitmix64(h2));
}

} // namespace fixtures

#endif
