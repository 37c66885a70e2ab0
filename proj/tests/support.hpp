#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include <chainseidel/block_string.hpp>
#include <chainseidel/graph.hpp>

namespace testsupport {

// Random block string with k <= max_k blocks and n <= max_n vertices.
inline chainseidel::BlockString random_block_string(std::mt19937_64& rng, std::size_t max_k, std::size_t max_n) {
    std::uniform_int_distribution<std::size_t> pick_k(1, std::min(max_k, max_n / 2));
    const std::size_t k = pick_k(rng);
    std::vector<std::size_t> counts(2 * k, 1);
    std::uniform_int_distribution<std::size_t> pick_n(2 * k, max_n);
    const std::size_t n = pick_n(rng);
    std::uniform_int_distribution<std::size_t> pick_cell(0, 2 * k - 1);
    for (std::size_t extra = n - 2 * k; extra > 0; --extra) ++counts[pick_cell(rng)];
    std::vector<chainseidel::Block> blocks;
    for (std::size_t i = 0; i < k; ++i) blocks.push_back({counts[2 * i], counts[2 * i + 1]});
    return chainseidel::BlockString(std::move(blocks));
}

inline chainseidel::Graph random_graph(std::mt19937_64& rng, std::size_t n, double p = 0.5) {
    std::bernoulli_distribution edge(p);
    chainseidel::Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (edge(rng)) g.add_edge(u, v);
    return g;
}

inline chainseidel::VertexSet random_subset(std::mt19937_64& rng, std::size_t n) {
    std::bernoulli_distribution in(0.5);
    chainseidel::VertexSet s(n);
    for (std::size_t v = 0; v < n; ++v)
        if (in(rng)) s.insert(v);
    return s;
}

inline std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

} // namespace testsupport
