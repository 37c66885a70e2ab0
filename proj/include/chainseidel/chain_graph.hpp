#pragma once

#include <cstddef>
#include <vector>

#include "block_string.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace chainseidel {

/// Half-open vertex index range [begin, end) of one partition cell.
struct Cell {
    std::size_t begin = 0;
    std::size_t end = 0;
    bool ones = false; // true for a V_t cell, false for a V_s cell
    std::size_t block = 0;

    std::size_t size() const noexcept { return end - begin; }
    bool contains(std::size_t v) const noexcept { return begin <= v && v < end; }
    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Chain graph together with its block partition C_1..C_2k.
///
/// Vertices are numbered cell by cell in string order. A vertex of the j-th
/// 1-block is adjacent to a vertex of the i-th 0-block iff i <= j.
class ChainGraph {
public:
    explicit ChainGraph(BlockString blocks) : blocks_(std::move(blocks)), graph_(blocks_.n()) {
        std::size_t next = 0;
        for (std::size_t j = 0; j < blocks_.k(); ++j) {
            const auto& b = blocks_.blocks()[j];
            cells_.push_back({next, next + b.zeros, false, j});
            next += b.zeros;
            cells_.push_back({next, next + b.ones, true, j});
            next += b.ones;
        }
        for (const auto& tc : cells_) {
            if (!tc.ones) continue;
            for (const auto& sc : cells_) {
                if (sc.ones || sc.block > tc.block) continue;
                for (std::size_t u = tc.begin; u < tc.end; ++u)
                    for (std::size_t v = sc.begin; v < sc.end; ++v) graph_.add_edge(u, v);
            }
        }
    }

    const BlockString& block_string() const noexcept { return blocks_; }
    const Graph& graph() const noexcept { return graph_; }
    const std::vector<Cell>& cells() const noexcept { return cells_; }
    std::size_t order() const noexcept { return graph_.order(); }

    std::size_t cell_of(std::size_t v) const {
        for (std::size_t c = 0; c < cells_.size(); ++c)
            if (cells_[c].contains(v)) return c;
        throw Error(ErrorCode::invalid_argument, "vertex out of range");
    }

    /// |U ∩ C_i| for every cell, in partition order.
    std::vector<std::size_t> split_per_cell(const VertexSet& subset) const {
        std::vector<std::size_t> out(cells_.size(), 0);
        for (std::size_t c = 0; c < cells_.size(); ++c)
            for (std::size_t v = cells_[c].begin; v < cells_[c].end; ++v)
                if (subset.contains(v)) ++out[c];
        return out;
    }

private:
    BlockString blocks_;
    Graph graph_;
    std::vector<Cell> cells_;
};

inline ChainGraph build_chain_graph(const BlockString& b) { return ChainGraph(b); }

inline constexpr std::size_t kChainValidatorCap = 64;

/// Brute-force check for induced C3, 2K2 and C5 over all 3-, 4- and 5-subsets.
inline bool is_chain_graph(const Graph& g) {
    const std::size_t n = g.order();
    require(n <= kChainValidatorCap, ErrorCode::size_cap, "chain-graph validator is limited to 64 vertices");

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) return false;

    std::vector<std::size_t> pick;
    auto induced_degree = [&](std::size_t v) {
        std::size_t d = 0;
        for (auto w : pick)
            if (w != v && g.adjacent(v, w)) ++d;
        return d;
    };
    // Every vertex of the induced subgraph has the given degree.
    auto all_degree = [&](std::size_t want) {
        for (auto v : pick)
            if (induced_degree(v) != want) return false;
        return true;
    };

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d) {
                    pick = {a, b, c, d};
                    if (all_degree(1)) return false; // perfect matching on 4 vertices is 2K2
                    for (std::size_t e = d + 1; e < n; ++e) {
                        pick = {a, b, c, d, e};
                        if (all_degree(2)) return false; // 2-regular on 5 vertices is C5
                    }
                }
    return true;
}

} // namespace chainseidel
