#ifndef SBE_VERTEX_SUBSET_HPP
#define SBE_VERTEX_SUBSET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "sbe/errors.hpp"

namespace sbe {

/// Subset of the vertex labels 1..universe, bit-indexed (vertex v -> bit v-1).
/// Value type; all set algebra assumes both operands share a universe.
class VertexSubset {
public:
    VertexSubset() = default;

    explicit VertexSubset(int universe)
        : universe_(universe), words_(word_count(universe), 0) {
        if (universe < 0)
            throw argument_error("subset universe must be non-negative");
    }

    static VertexSubset full(int universe) {
        VertexSubset s(universe);
        for (auto& w : s.words_) w = ~0ULL;
        s.clear_tail();
        return s;
    }

    static VertexSubset of(int universe, std::initializer_list<int> vs) {
        VertexSubset s(universe);
        for (int v : vs) s.add(v);
        return s;
    }

    int universe() const { return universe_; }

    bool contains(int v) const {
        if (v < 1 || v > universe_) return false;
        return (words_[(v - 1) >> 6] >> ((v - 1) & 63)) & 1ULL;
    }

    void add(int v) {
        check_member(v);
        words_[(v - 1) >> 6] |= 1ULL << ((v - 1) & 63);
    }

    void remove(int v) {
        check_member(v);
        words_[(v - 1) >> 6] &= ~(1ULL << ((v - 1) & 63));
    }

    VertexSubset with_added(int v) const {
        VertexSubset s(*this);
        s.add(v);
        return s;
    }

    VertexSubset with_removed(int v) const {
        VertexSubset s(*this);
        s.remove(v);
        return s;
    }

    int size() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool intersects(const VertexSubset& o) const {
        const std::size_t k = std::min(words_.size(), o.words_.size());
        for (std::size_t i = 0; i < k; ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSubset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t other = i < o.words_.size() ? o.words_[i] : 0;
            if (words_[i] & ~other) return false;
        }
        return true;
    }

    VertexSubset intersect(const VertexSubset& o) const {
        VertexSubset s(*this);
        for (std::size_t i = 0; i < s.words_.size(); ++i)
            s.words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
        return s;
    }

    VertexSubset unite(const VertexSubset& o) const {
        VertexSubset s(*this);
        for (std::size_t i = 0; i < s.words_.size() && i < o.words_.size(); ++i)
            s.words_[i] |= o.words_[i];
        return s;
    }

    /// Smallest member, or 0 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return (int)(i * 64 + std::countr_zero(words_[i]) + 1);
        return 0;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f((int)(i * 64 + std::countr_zero(w) + 1));
                w &= w - 1;
            }
        }
    }

    std::vector<int> vertices() const {
        std::vector<int> vs;
        vs.reserve(size());
        for_each([&](int v) { vs.push_back(v); });
        return vs;
    }

    std::string to_string() const {
        std::string s = "{";
        bool sep = false;
        for_each([&](int v) {
            if (sep) s += ',';
            s += std::to_string(v);
            sep = true;
        });
        s += '}';
        return s;
    }

    friend bool operator==(const VertexSubset& a, const VertexSubset& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

    // Total order on bit content (value order, high word first); this is what
    // the per-layer dedup search trees sort by.
    friend bool operator<(const VertexSubset& a, const VertexSubset& b) {
        if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
        for (std::size_t i = a.words_.size(); i-- > 0;)
            if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
        return false;
    }

private:
    static std::size_t word_count(int universe) {
        return (std::size_t)((universe + 63) / 64);
    }

    void check_member(int v) const {
        if (v < 1 || v > universe_)
            throw argument_error("vertex " + std::to_string(v) +
                                 " outside universe 1.." + std::to_string(universe_));
    }

    void clear_tail() {
        int spare = (int)words_.size() * 64 - universe_;
        if (spare > 0 && !words_.empty()) words_.back() &= ~0ULL >> spare;
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace sbe

#endif
