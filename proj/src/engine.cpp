#include "sbe/engine.hpp"

#include <sstream>

namespace sbe {

std::optional<Edge> splitting_edge(const Graph& g, const VertexSubset& node) {
    // Scanning members in ascending order finds the lexicographic minimum:
    // any internal edge (u', v') with u' < u would have surfaced at u'.
    std::optional<Edge> result;
    node.for_each([&](int u) {
        if (result) return;
        const VertexSubset shared = g.neighbor_set(u).intersect(node);
        int v = 0;
        shared.for_each([&](int w) {
            if (v == 0 && w > u) v = w;
        });
        if (v != 0) result = Edge{u, v};
    });
    return result;
}

std::pair<VertexSubset, VertexSubset> split(const VertexSubset& node, const Edge& edge) {
    if (!node.contains(edge.u) || !node.contains(edge.v))
        throw argument_error("split edge (" + std::to_string(edge.u) + "," +
                             std::to_string(edge.v) + ") not inside node " + node.to_string());
    return {node.with_removed(edge.u), node.with_removed(edge.v)};
}

std::vector<std::uint64_t> SbeTree::layer_widths() const {
    std::vector<std::uint64_t> widths;
    for (const auto& n : nodes_) {
        if ((std::size_t)n.depth >= widths.size()) widths.resize(n.depth + 1, 0);
        ++widths[n.depth];
    }
    return widths;
}

SbeTree build_sbe_tree(const Graph& g, std::uint64_t node_budget) {
    SbeTree tree;
    tree.nodes_.push_back({g.vertex_set(), 0, std::nullopt, -1, -1});
    // Level order; children of nodes_[i] are appended while i sweeps forward.
    for (std::size_t i = 0; i < tree.nodes_.size(); ++i) {
        auto edge = splitting_edge(g, tree.nodes_[i].subset);
        if (!edge) continue;
        if (tree.nodes_.size() + 2 > node_budget)
            throw budget_error(tree.nodes_[i].depth + 1, tree.nodes_.size(), 0,
                               tree.layer_widths());
        auto [left, right] = split(tree.nodes_[i].subset, *edge);
        const int depth = tree.nodes_[i].depth + 1;
        tree.nodes_[i].edge = *edge;
        tree.nodes_[i].left = (std::int64_t)tree.nodes_.size();
        tree.nodes_.push_back({std::move(left), depth, std::nullopt, -1, -1});
        tree.nodes_[i].right = (std::int64_t)tree.nodes_.size();
        tree.nodes_.push_back({std::move(right), depth, std::nullopt, -1, -1});
    }
    return tree;
}

namespace {

// Shared by the public expand_layer and the budgeted layer loop. nodes_so_far,
// when present, is bumped per inserted child and checked against the budget.
ExpandResult expand_layer_impl(const Graph& g, const Layer& layer,
                               std::uint64_t* nodes_so_far, std::uint64_t node_budget,
                               std::uint64_t splits_before,
                               const std::vector<std::uint64_t>* widths_before) {
    ExpandResult result{Layer(layer.depth() + 1), 0, {}};
    for (const auto& node : layer.nodes()) {
        auto edge = splitting_edge(g, node);
        if (!edge) {
            result.leaves.push_back(node);
            continue;
        }
        ++result.splits;
        auto [left, right] = split(node, *edge);
        for (auto* child : {&left, &right}) {
            if (!result.next.insert(std::move(*child))) continue;
            if (nodes_so_far && ++*nodes_so_far > node_budget) {
                auto widths = *widths_before;
                widths.push_back(result.next.width());
                throw budget_error(result.next.depth(), *nodes_so_far,
                                   splits_before + result.splits, std::move(widths));
            }
        }
    }
    return result;
}

} // namespace

ExpandResult expand_layer(const Graph& g, const Layer& layer) {
    return expand_layer_impl(g, layer, nullptr, 0, 0, nullptr);
}

UsbeLayers build_usbe_layers(const Graph& g, std::uint64_t node_budget) {
    UsbeLayers result;
    Layer root(0);
    root.insert(g.vertex_set());
    std::uint64_t nodes = 1;
    if (nodes > node_budget) throw budget_error(0, 1, 0, {});
    result.layers.push_back(std::move(root));

    while (true) {
        const Layer& current = result.layers.back();
        result.layer_widths.push_back(current.width());
        result.total_size += current.width();

        auto expanded = expand_layer_impl(g, current, &nodes, node_budget,
                                          result.total_splits, &result.layer_widths);
        result.total_splits += expanded.splits;
        if (expanded.next.width() == 0) break;
        result.layers.push_back(std::move(expanded.next));
    }
    return result;
}

std::vector<ParentLink> reconstruct_parents(const Graph& g, const VertexSubset& node) {
    std::vector<ParentLink> links;
    const auto& edges = g.edges();
    for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
        const bool has_u = node.contains(it->u);
        const bool has_v = node.contains(it->v);
        if (has_u == has_v) continue;
        const int inside = has_u ? it->u : it->v;
        const int missing = has_u ? it->v : it->u;
        VertexSubset parent = node.with_added(missing);
        // Candidate is real only if the ordered tree would split the parent
        // by this very edge.
        if (splitting_edge(g, parent) != std::optional<Edge>(*it)) continue;
        links.push_back({std::move(parent), node.with_added(missing).with_removed(inside), *it});
    }
    return links;
}

std::string to_text(const std::vector<Layer>& layers) {
    std::ostringstream out;
    for (const auto& layer : layers) {
        out << "layer " << layer.depth() << '\n';
        for (const auto& node : layer.nodes()) {
            bool sep = false;
            node.for_each([&](int v) {
                if (sep) out << ' ';
                out << v;
                sep = true;
            });
            out << '\n';
        }
    }
    return out.str();
}

std::string to_text(const SbeTree& tree) {
    std::ostringstream out;
    int depth = -1;
    for (const auto& node : tree.nodes()) {
        if (node.depth != depth) {
            depth = node.depth;
            out << "layer " << depth << '\n';
        }
        bool sep = false;
        node.subset.for_each([&](int v) {
            if (sep) out << ' ';
            out << v;
            sep = true;
        });
        out << '\n';
    }
    return out.str();
}

} // namespace sbe
