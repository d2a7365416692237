#ifndef SBE_GRAPH_HPP
#define SBE_GRAPH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sbe/vertex_subset.hpp"

namespace sbe {

/// Normalized undirected edge, u < v. Ordered lexicographically:
/// uv < wx iff u < w or (u = w and v < x).
struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

inline Edge make_edge(int a, int b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

/// Simple undirected graph on vertex labels 1..n. Immutable after
/// construction; safe to share across concurrent readers.
class Graph {
public:
    Graph() = default;

    /// Validates and normalizes: rejects self-loops, out-of-range labels and
    /// duplicate edges; sorts edges and per-vertex neighbor lists.
    static Graph from_edges(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return (int)edges_.size(); }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[check_vertex(v)]; }
    int degree(int v) const { return (int)adj_[check_vertex(v)].size(); }
    const VertexSubset& neighbor_set(int v) const { return adj_mask_[check_vertex(v)]; }

    bool has_edge(int u, int v) const {
        return u != v && neighbor_set(u).contains(v);
    }

    VertexSubset vertex_set() const { return VertexSubset::full(n_); }

    int min_degree() const;
    int max_degree() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int check_vertex(int v) const {
        if (v < 1 || v > n_)
            throw argument_error("vertex " + std::to_string(v) + " outside 1.." +
                                 std::to_string(n_));
        return v;
    }

    int n_ = 0;
    std::vector<Edge> edges_;                 // sorted, normalized
    std::vector<std::vector<int>> adj_;       // 1-based, adj_[0] unused
    std::vector<VertexSubset> adj_mask_;      // 1-based
};

/// Parses either the minimal edge-list format ("n m" header, then "u v"
/// lines) or DIMACS-like text ("c" comments, "p edge n m", "e u v").
Graph parse_graph(std::string_view text);

enum class GraphFormat { edge_list, dimacs };

/// Inverse of parse_graph; bit-exact round trip for either format.
std::string write_graph(const Graph& g, GraphFormat format = GraphFormat::edge_list);

// ---------------------------------------------------------------------------
// Generators. Deterministic for fixed (family, params, seed).

enum class Family { path, cycle, complete, moebius, gnm, regular, apollonian };

const char* family_name(Family f);
Family family_from_string(std::string_view name);

struct GenSpec {
    Family family = Family::path;
    int n = 0;
    long long m = 0;       // gnm only
    int d = 0;             // regular only
    std::uint64_t seed = 0;
};

Graph generate(const GenSpec& spec);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph moebius_ladder(int n);                                 // even n >= 4, m = 3n/2
Graph gnm_graph(int n, long long m, std::uint64_t seed);     // m distinct pairs
Graph regular_graph(int n, int d, std::uint64_t seed);       // n*d even, d < n
Graph apollonian_graph(int n, std::uint64_t seed);           // n >= 3, m = 3n-6

// ---------------------------------------------------------------------------
// Degree reordering.

/// Permutation of 1..n and its inverse; forward maps old label -> new label.
struct VertexMapping {
    std::vector<int> forward;    // 1-based; forward[0] unused
    std::vector<int> inverse;

    int map(int v) const { return forward[v]; }
    int unmap(int v) const { return inverse[v]; }

    VertexSubset map_set(const VertexSubset& s) const;
    VertexSubset unmap_set(const VertexSubset& s) const;

    static VertexMapping identity(int n);
};

enum class DegreeOrder { descending, ascending };

/// Relabels so new labels follow the requested degree order; ties broken by
/// ascending original label. The result is isomorphic to g under the mapping.
std::pair<Graph, VertexMapping> reorder_by_degree(const Graph& g, DegreeOrder order);

/// True iff no edge of g has both endpoints in s.
bool is_independent(const Graph& g, const VertexSubset& s);

} // namespace sbe

#endif
