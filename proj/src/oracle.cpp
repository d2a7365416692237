#include "sbe/oracle.hpp"

#include <bit>
#include <cstdint>

namespace sbe {

namespace {

void check_guard(const Graph& g, int limit, const char* op) {
    if (g.vertex_count() > limit)
        throw argument_error(std::string(op) + " refuses n > " + std::to_string(limit));
}

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(g.vertex_count() + 1, 0);
    for (const auto& e : g.edges()) {
        adj[e.u] |= 1u << (e.v - 1);
        adj[e.v] |= 1u << (e.u - 1);
    }
    return adj;
}

bool mask_independent(std::uint32_t mask, const std::vector<std::uint32_t>& adj) {
    for (std::uint32_t rest = mask; rest;) {
        const int v = std::countr_zero(rest) + 1;
        rest &= rest - 1;
        if (adj[v] & mask) return false;
    }
    return true;
}

VertexSubset from_mask(int n, std::uint32_t mask) {
    VertexSubset s(n);
    for (std::uint32_t rest = mask; rest;) {
        s.add(std::countr_zero(rest) + 1);
        rest &= rest - 1;
    }
    return s;
}

} // namespace

IndependentFamily brute_all_independent_sets(const Graph& g) {
    check_guard(g, 24, "brute_all_independent_sets");
    const int n = g.vertex_count();
    const auto adj = adjacency_masks(g);
    IndependentFamily family(n);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask)
        if (mask_independent(mask, adj)) family.insert(from_mask(n, mask));
    return family;
}

BruteMis brute_mis(const Graph& g) {
    check_guard(g, 24, "brute_mis");
    const int n = g.vertex_count();
    const auto adj = adjacency_masks(g);
    BruteMis best;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const int size = std::popcount(mask);
        if (size < best.alpha || !mask_independent(mask, adj)) continue;
        if (size > best.alpha) {
            best.alpha = size;
            best.sets.clear();
        }
        best.sets.push_back(from_mask(n, mask));
    }
    return best;
}

std::vector<VertexSubset> brute_maximal_independent_sets(const Graph& g) {
    check_guard(g, 24, "brute_maximal_independent_sets");
    const int n = g.vertex_count();
    const auto adj = adjacency_masks(g);
    std::vector<VertexSubset> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (!mask_independent(mask, adj)) continue;
        bool maximal = true;
        for (int v = 1; v <= n && maximal; ++v)
            if (!(mask & (1u << (v - 1))) && !(adj[v] & mask)) maximal = false;
        if (maximal) out.push_back(from_mask(n, mask));
    }
    return out;
}

namespace {

struct PartitionSearch {
    int n = 0;
    const std::vector<std::uint32_t>* adj = nullptr;
    int best = 0;
    std::vector<std::uint32_t> classes;
    std::vector<Coloring> optimal;

    // Restricted-growth assignment: vertex v joins an existing compatible
    // class or opens the next one, so each set partition appears once.
    void assign(int v) {
        if ((int)classes.size() > best) return;
        if (v > n) {
            const int k = (int)classes.size();
            if (k < best) {
                best = k;
                optimal.clear();
            }
            if (k == best) {
                std::vector<VertexSubset> parts;
                for (auto mask : classes) parts.push_back(from_mask(n, mask));
                optimal.push_back(make_coloring(std::move(parts)));
            }
            return;
        }
        const std::uint32_t bit = 1u << (v - 1);
        // index, not reference: the recursion grows and shrinks the vector
        const std::size_t existing = classes.size();
        for (std::size_t ci = 0; ci < existing; ++ci) {
            if ((*adj)[v] & classes[ci]) continue;
            classes[ci] |= bit;
            assign(v + 1);
            classes[ci] &= ~bit;
        }
        classes.push_back(bit);
        assign(v + 1);
        classes.pop_back();
    }
};

} // namespace

BruteChromatic brute_chromatic(const Graph& g) {
    check_guard(g, 12, "brute_chromatic");
    const auto adj = adjacency_masks(g);
    PartitionSearch search;
    search.n = g.vertex_count();
    search.adj = &adj;
    search.best = g.vertex_count();
    search.assign(1);
    return {search.best, std::move(search.optimal)};
}

} // namespace sbe
