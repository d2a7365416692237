#include "sbe/mis.hpp"

namespace sbe {

const char* to_string(Ordering o) {
    switch (o) {
        case Ordering::none: return "none";
        case Ordering::descending: return "descending";
        case Ordering::ascending: return "ascending";
    }
    return "?";
}

Ordering ordering_from_string(std::string_view name) {
    for (Ordering o : {Ordering::none, Ordering::descending, Ordering::ascending})
        if (name == to_string(o)) return o;
    throw argument_error("unknown ordering '" + std::string(name) + "'");
}

MisResult find_mis(const Graph& g, std::uint64_t node_budget) {
    MisResult result;
    Layer layer(0);
    layer.insert(g.vertex_set());
    std::uint64_t nodes = 1;
    if (nodes > node_budget) throw budget_error(0, 1, 0, {});

    while (true) {
        result.stats.layer_widths.push_back(layer.width());

        std::vector<std::optional<Edge>> edges;
        edges.reserve(layer.width());
        std::vector<VertexSubset> leaves;
        for (const auto& node : layer.nodes()) {
            edges.push_back(splitting_edge(g, node));
            if (!edges.back()) leaves.push_back(node);
        }
        if (!leaves.empty()) {
            result.mis_sets = std::move(leaves);
            result.stats.mis_depth = layer.depth();
            result.stats.alpha = g.vertex_count() - layer.depth();
            return result;
        }

        Layer next(layer.depth() + 1);
        for (std::size_t i = 0; i < layer.nodes().size(); ++i) {
            ++result.stats.delta;
            auto [left, right] = split(layer.nodes()[i], *edges[i]);
            for (auto* child : {&left, &right}) {
                if (!next.insert(std::move(*child))) continue;
                if (++nodes > node_budget) {
                    auto widths = result.stats.layer_widths;
                    widths.push_back(next.width());
                    throw budget_error(next.depth(), nodes, result.stats.delta,
                                       std::move(widths));
                }
            }
        }
        layer = std::move(next);
    }
}

MisResult find_mis_with_ordering(const Graph& g, Ordering ordering,
                                 std::uint64_t node_budget) {
    if (ordering == Ordering::none) return find_mis(g, node_budget);

    auto [reordered, mapping] =
        reorder_by_degree(g, ordering == Ordering::descending ? DegreeOrder::descending
                                                              : DegreeOrder::ascending);
    MisResult result = find_mis(reordered, node_budget);
    for (auto& s : result.mis_sets) s = mapping.unmap_set(s);
    return result;
}

} // namespace sbe
