#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace chainseidel {

/// Fixed-size set of vertex indices backed by 64-bit words.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    static VertexSet from_mask(std::size_t size, std::uint64_t mask) {
        require(size >= 64 || (mask >> size) == 0, ErrorCode::invalid_argument,
                "vertex mask has bits beyond the vertex count");
        VertexSet s(size);
        if (!s.words_.empty()) s.words_[0] = mask;
        return s;
    }

    static VertexSet full(std::size_t size) {
        VertexSet s(size);
        for (std::size_t v = 0; v < size; ++v) s.insert(v);
        return s;
    }

    std::size_t size() const noexcept { return size_; }

    bool contains(std::size_t v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1U; }
    void insert(std::size_t v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(std::size_t v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    void flip(std::size_t v) noexcept { words_[v >> 6] ^= std::uint64_t{1} << (v & 63); }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    std::size_t count_common(const VertexSet& other) const noexcept {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    VertexSet complement() const {
        VertexSet s(size_);
        for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
        s.trim();
        return s;
    }

    VertexSet& operator^=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    bool is_subset_of(const VertexSet& o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    /// Low 64 bits; exact when size() <= 64.
    std::uint64_t mask() const noexcept { return words_.empty() ? 0 : words_[0]; }

    std::vector<std::size_t> elements() const {
        std::vector<std::size_t> out;
        for (std::size_t v = 0; v < size_; ++v)
            if (contains(v)) out.push_back(v);
        return out;
    }

    /// Lowercase hex, most significant nibble first; bit i is vertex i.
    std::string to_hex() const {
        static constexpr char digits[] = "0123456789abcdef";
        std::string out;
        const std::size_t nibbles = std::max<std::size_t>(1, (size_ + 3) / 4);
        for (std::size_t i = nibbles; i-- > 0;) {
            unsigned nib = 0;
            for (std::size_t b = 0; b < 4; ++b) {
                const std::size_t v = i * 4 + b;
                if (v < size_ && contains(v)) nib |= 1U << b;
            }
            out.push_back(digits[nib]);
        }
        return out;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    void trim() noexcept {
        if (size_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Simple undirected graph with one bitset row per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : rows_(n, VertexSet(n)) {}

    static Graph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    std::size_t order() const noexcept { return rows_.size(); }

    bool adjacent(std::size_t u, std::size_t v) const noexcept { return rows_[u].contains(v); }

    void add_edge(std::size_t u, std::size_t v) {
        require(u < order() && v < order(), ErrorCode::invalid_argument, "edge endpoint out of range");
        require(u != v, ErrorCode::invalid_argument, "self-loops are not allowed");
        rows_[u].insert(v);
        rows_[v].insert(u);
    }

    void remove_edge(std::size_t u, std::size_t v) noexcept {
        rows_[u].erase(v);
        rows_[v].erase(u);
    }

    void toggle_edge(std::size_t u, std::size_t v) noexcept {
        rows_[u].flip(v);
        rows_[v].flip(u);
    }

    const VertexSet& neighbors(std::size_t v) const noexcept { return rows_[v]; }

    std::size_t degree(std::size_t v) const noexcept { return rows_[v].count(); }

    std::size_t edge_count() const noexcept {
        std::size_t twice = 0;
        for (const auto& r : rows_) twice += r.count();
        return twice / 2;
    }

    std::vector<std::pair<std::size_t, std::size_t>> edges() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t u = 0; u < order(); ++u)
            for (std::size_t v = u + 1; v < order(); ++v)
                if (adjacent(u, v)) out.emplace_back(u, v);
        return out;
    }

    /// Graph with vertex v of this graph renamed to perm[v].
    Graph relabeled(const std::vector<std::size_t>& perm) const {
        require(perm.size() == order(), ErrorCode::invalid_argument, "permutation size mismatch");
        Graph h(order());
        for (auto [u, v] : edges()) h.add_edge(perm[u], perm[v]);
        return h;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexSet> rows_;
};

/// Non-increasing degree list.
inline std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) d[v] = static_cast<int>(g.degree(v));
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

inline Graph cycle_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

inline Graph path_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

} // namespace chainseidel
