#ifndef SBE_ENGINE_HPP
#define SBE_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sbe/graph.hpp"

namespace sbe {

inline constexpr std::uint64_t default_node_budget = 1ull << 26;

/// The minimum edge (lexicographic order) with both endpoints in node, or
/// nothing when node is independent, i.e. a leaf.
std::optional<Edge> splitting_edge(const Graph& g, const VertexSubset& node);

/// One split operation: (node - u, node - v) for edge (u, v), u < v.
std::pair<VertexSubset, VertexSubset> split(const VertexSubset& node, const Edge& edge);

// ---------------------------------------------------------------------------
// Explicit trees (duplicates retained).

struct SbeNode {
    VertexSubset subset;
    int depth = 0;
    std::optional<Edge> edge;   // splitting edge; absent on leaves
    std::int64_t left = -1;
    std::int64_t right = -1;

    bool is_leaf() const { return !edge.has_value(); }
};

/// Ordered split-by-edges tree, stored level by level (root first).
class SbeTree {
public:
    std::size_t size() const { return nodes_.size(); }
    const SbeNode& node(std::size_t i) const { return nodes_[i]; }
    const std::vector<SbeNode>& nodes() const { return nodes_; }
    std::size_t root() const { return 0; }
    int height() const { return nodes_.empty() ? 0 : nodes_.back().depth; }

    std::vector<std::uint64_t> layer_widths() const;

private:
    friend SbeTree build_sbe_tree(const Graph&, std::uint64_t);
    std::vector<SbeNode> nodes_;
};

/// Full ordered SBE-tree, duplicate subsets and all. Throws budget_error when
/// the node count would exceed node_budget.
SbeTree build_sbe_tree(const Graph& g, std::uint64_t node_budget = default_node_budget);

// ---------------------------------------------------------------------------
// Deduplicated layers (the USBE view).

/// One depth layer: distinct subsets in insertion order plus the layer's
/// dedup index, an ordered search tree over subset contents.
class Layer {
public:
    explicit Layer(int depth) : depth_(depth) {}

    int depth() const { return depth_; }
    const std::vector<VertexSubset>& nodes() const { return nodes_; }
    std::size_t width() const { return nodes_.size(); }

    bool contains(const VertexSubset& s) const { return index_.count(s) > 0; }

    /// False (and no change) when s is already present.
    bool insert(VertexSubset s) {
        if (!index_.insert(s).second) return false;
        nodes_.push_back(std::move(s));
        return true;
    }

private:
    int depth_;
    std::vector<VertexSubset> nodes_;
    std::set<VertexSubset> index_;
};

struct ExpandResult {
    Layer next;
    std::uint64_t splits = 0;                 // one per non-leaf node of the input
    std::vector<VertexSubset> leaves;         // independent nodes of the input layer
};

/// Splits every non-leaf node of layer by its ordered splitting edge and
/// merges the children, discarding duplicates. Leaves are reported, not
/// expanded. Children arrive in parent insertion order, left before right.
ExpandResult expand_layer(const Graph& g, const Layer& layer);

struct UsbeLayers {
    std::vector<Layer> layers;
    std::uint64_t total_size = 0;             // sum of widths
    std::vector<std::uint64_t> layer_widths;
    std::uint64_t total_splits = 0;
};

/// Expands layer by layer from {V(G)} until no non-leaf nodes remain.
UsbeLayers build_usbe_layers(const Graph& g, std::uint64_t node_budget = default_node_budget);

// ---------------------------------------------------------------------------
// Parent reconstruction.

struct ParentLink {
    VertexSubset parent;
    VertexSubset sibling;
    Edge edge;
};

/// All (parent, sibling, edge) triples that would produce node in the ordered
/// tree, scanning candidate edges in descending order: edge (u,v) with
/// u in node, v not in node qualifies iff splitting_edge(node+v) is exactly
/// that edge. Empty for the root.
std::vector<ParentLink> reconstruct_parents(const Graph& g, const VertexSubset& node);

// ---------------------------------------------------------------------------
// Text dumps for golden-file tests.

std::string to_text(const std::vector<Layer>& layers);
std::string to_text(const SbeTree& tree);

} // namespace sbe

#endif
