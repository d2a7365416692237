#include "sbe/coloring.hpp"

#include <algorithm>
#include <sstream>

namespace sbe {

namespace {

void add_up_rec(int remaining, int parts_left, int max_part,
                PartitionSpec& current, std::vector<PartitionSpec>& out) {
    if (parts_left == 0) {
        if (remaining == 0) out.push_back(current);
        return;
    }
    // Largest first keeps the output lexicographically descending.
    for (int part = std::min(max_part, remaining - (parts_left - 1)); part >= 1; --part) {
        if ((long long)part * parts_left < remaining) break;
        current.push_back(part);
        add_up_rec(remaining - part, parts_left - 1, part, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<PartitionSpec> add_up_sets(int n, int k, int mu) {
    if (n < 1 || k < 1 || mu < 1) throw argument_error("add_up_sets needs n, k, mu >= 1");
    std::vector<PartitionSpec> out;
    PartitionSpec current;
    add_up_rec(n, k, mu, current, out);
    return out;
}

Coloring make_coloring(std::vector<VertexSubset> classes) {
    std::sort(classes.begin(), classes.end(), [](const VertexSubset& a, const VertexSubset& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return Coloring{std::move(classes)};
}

std::string to_text(const Coloring& c) {
    std::ostringstream out;
    for (const auto& cls : c.classes) out << cls.to_string() << '\n';
    return out.str();
}

namespace {

// Depth-first match search shared by the one-shot and enumerate-all paths.
// Within a run of equal part sizes the bucket index is forced strictly
// increasing, so each unordered partition is visited exactly once.
template <typename OnComplete>
bool search_spec(const IndependentFamily& family, const PartitionSpec& spec,
                 std::vector<const VertexSubset*>& chosen, std::vector<std::size_t>& indices,
                 VertexSubset used, std::size_t pos, const OnComplete& on_complete) {
    if (pos == spec.size()) return on_complete(chosen);

    const auto& bucket = family.bucket(spec[pos]);
    std::size_t start = 0;
    if (pos > 0 && spec[pos] == spec[pos - 1]) start = indices[pos - 1] + 1;
    for (std::size_t i = start; i < bucket.size(); ++i) {
        if (bucket[i].intersects(used)) continue; // not a match
        chosen.push_back(&bucket[i]);
        indices[pos] = i;
        if (search_spec(family, spec, chosen, indices, used.unite(bucket[i]), pos + 1,
                        on_complete))
            return true;
        chosen.pop_back();
    }
    return false;
}

template <typename OnComplete>
void for_each_spec_coloring(const IndependentFamily& family, const PartitionSpec& spec,
                            const OnComplete& on_complete) {
    std::vector<const VertexSubset*> chosen;
    std::vector<std::size_t> indices(spec.size(), 0);
    search_spec(family, spec, chosen, indices, VertexSubset(family.universe()), 0,
                on_complete);
}

Coloring assemble(const std::vector<const VertexSubset*>& chosen) {
    std::vector<VertexSubset> classes;
    classes.reserve(chosen.size());
    for (const auto* c : chosen) classes.push_back(*c);
    return make_coloring(std::move(classes));
}

} // namespace

std::optional<Coloring> find_coloring_for_spec(const IndependentFamily& family,
                                               const PartitionSpec& spec) {
    std::optional<Coloring> found;
    for_each_spec_coloring(family, spec, [&](const std::vector<const VertexSubset*>& chosen) {
        found = assemble(chosen);
        return true; // stop at the first complete tuple
    });
    return found;
}

ChromaticResult chromatic_number(const Graph& g, std::uint64_t node_budget) {
    const int n = g.vertex_count();
    IndependentFamily family = close_downward(foliage(g, node_budget));
    const int mu = family.mu();

    for (int k = (n + mu - 1) / mu; k <= n; ++k) {
        for (const auto& spec : add_up_sets(n, k, mu)) {
            auto coloring = find_coloring_for_spec(family, spec);
            if (coloring) return {k, std::move(*coloring)};
        }
    }
    throw error("no coloring found"); // unreachable: k = n always colors
}

std::vector<Coloring> all_colorings(const IndependentFamily& family, int n, int k) {
    std::vector<Coloring> out;
    if (k < 1 || family.mu() == 0) return out;
    for (const auto& spec : add_up_sets(n, k, family.mu())) {
        for_each_spec_coloring(family, spec, [&](const std::vector<const VertexSubset*>& chosen) {
            out.push_back(assemble(chosen));
            return false; // keep enumerating
        });
    }
    return out;
}

std::vector<Coloring> all_colorings(const Graph& g, int k, std::uint64_t node_budget) {
    IndependentFamily family = close_downward(foliage(g, node_budget));
    return all_colorings(family, g.vertex_count(), k);
}

} // namespace sbe
