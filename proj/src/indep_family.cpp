#include "sbe/indep_family.hpp"

#include <sstream>

namespace sbe {

bool IndependentFamily::insert(VertexSubset s) {
    const int c = s.size();
    if (c == 0) return false;
    if (!index_.insert(s).second) return false;
    if ((int)buckets_.size() <= c) buckets_.resize(c + 1);
    buckets_[c].push_back(std::move(s));
    return true;
}

std::string IndependentFamily::to_text() const {
    std::ostringstream out;
    for (int c = (int)buckets_.size(); c-- > 1;) {
        if (buckets_[c].empty()) continue;
        out << "cardinality " << c << '\n';
        for (const auto& s : buckets_[c]) out << s.to_string() << '\n';
    }
    return out.str();
}

IndependentFamily foliage(const Graph& g, std::uint64_t node_budget) {
    UsbeLayers usbe = build_usbe_layers(g, node_budget);
    IndependentFamily family(g.vertex_count());
    for (const auto& layer : usbe.layers)
        for (const auto& node : layer.nodes())
            if (!splitting_edge(g, node)) family.insert(node);
    return family;
}

IndependentFamily close_downward(const IndependentFamily& f, int* iterations) {
    IndependentFamily closed = f;
    std::vector<VertexSubset> frontier;
    for (int c = closed.mu(); c >= 1; --c)
        for (const auto& s : closed.bucket(c)) frontier.push_back(s);

    int rounds = 0;
    while (!frontier.empty()) {
        std::vector<VertexSubset> next;
        for (const auto& y : frontier) {
            if (y.size() <= 1) continue;
            y.for_each([&](int v) {
                VertexSubset x = y.with_removed(v);
                if (closed.insert(x)) next.push_back(std::move(x));
            });
        }
        if (!next.empty()) ++rounds;
        frontier = std::move(next);
    }
    if (iterations) *iterations = rounds;
    return closed;
}

} // namespace sbe
