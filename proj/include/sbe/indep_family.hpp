#ifndef SBE_INDEP_FAMILY_HPP
#define SBE_INDEP_FAMILY_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "sbe/engine.hpp"

namespace sbe {

/// Independent sets bucketed by cardinality, duplicate-free across buckets.
class IndependentFamily {
public:
    explicit IndependentFamily(int universe) : universe_(universe) {}

    int universe() const { return universe_; }

    /// Largest occupied cardinality (0 when the family is empty).
    int mu() const {
        for (int c = (int)buckets_.size(); c-- > 1;)
            if (!buckets_[c].empty()) return c;
        return 0;
    }

    const std::vector<VertexSubset>& bucket(int cardinality) const {
        static const std::vector<VertexSubset> none;
        if (cardinality < 1 || cardinality >= (int)buckets_.size()) return none;
        return buckets_[cardinality];
    }

    std::uint64_t total_count() const {
        std::uint64_t c = 0;
        for (const auto& b : buckets_) c += b.size();
        return c;
    }

    bool contains(const VertexSubset& s) const { return index_.count(s) > 0; }

    /// False (and no change) for duplicates or the empty set.
    bool insert(VertexSubset s);

    /// One set per line, grouped by cardinality, largest first.
    std::string to_text() const;

    /// Members as one flat ordered set (for equality in tests).
    std::set<VertexSubset> as_set() const { return index_; }

private:
    int universe_;
    std::vector<std::vector<VertexSubset>> buckets_; // [cardinality] -> members
    std::set<VertexSubset> index_;                   // global duplicate-free index
};

/// All distinct leaves of the fully expanded USBE layers, bucketed by
/// cardinality. Contains every maximal independent set of g.
IndependentFamily foliage(const Graph& g, std::uint64_t node_budget = default_node_budget);

/// Downward closure: repeatedly adds every (|Y|-1)-subset of current members
/// Y, |Y| > 1, that is not yet present, until a fixpoint. Applied to the
/// foliage this yields exactly the nonempty independent sets of g.
/// iterations, when given, receives the number of non-empty frontiers
/// generated after the seed family.
IndependentFamily close_downward(const IndependentFamily& f, int* iterations = nullptr);

} // namespace sbe

#endif
