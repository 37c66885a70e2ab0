#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

// Canonical labeling by individualization and refinement.
//
// The ordered partition is refined to an equitable one by splitting cells on
// neighbour counts into every cell; a non-singleton cell is then
// individualized vertex by vertex. Every leaf (discrete partition) yields a
// relabeled adjacency code and the least code wins. Three prunings keep the
// search small: leaves sharing a leaf-prefix worse than the best are cut,
// nodes whose cells are pairwise homogeneous (cliques/cocliques with
// complete or empty links) are collapsed to one leaf, and children in the
// same orbit of discovered automorphisms fixing the current base are skipped.

namespace chainseidel {

inline constexpr std::size_t kCanonicalCap = 20;

/// Relabeled adjacency in canonical order. `code[i]` holds row i restricted
/// to columns j < i, column 0 in the most significant used bit.
struct CanonicalForm {
    std::size_t n = 0;
    std::vector<std::uint32_t> code;
    std::vector<std::size_t> labeling; // labeling[v] = canonical position of v

    Graph graph() const {
        Graph g(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if ((code[i] >> (31 - j)) & 1U) g.add_edge(i, j);
        return g;
    }

    /// Lower-triangle bits (i = 1..n-1, j = 0..i-1) packed MSB-first into hex.
    std::string to_hex() const {
        std::vector<bool> bits;
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) bits.push_back((code[i] >> (31 - j)) & 1U);
        while (bits.size() % 4 != 0) bits.push_back(false);
        static constexpr char digits[] = "0123456789abcdef";
        std::string out;
        for (std::size_t i = 0; i < bits.size(); i += 4)
            out.push_back(digits[(bits[i] << 3) | (bits[i + 1] << 2) | (bits[i + 2] << 1) | bits[i + 3]]);
        return out.empty() ? "0" : out;
    }

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.n == b.n && a.code == b.code; }
    friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
        return a.n != b.n ? a.n < b.n : a.code < b.code;
    }
};

namespace detail {

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : n_(g.order()), adj_(g.order()) {
        for (std::size_t v = 0; v < n_; ++v) adj_[v] = static_cast<std::uint32_t>(g.neighbors(v).mask());
    }

    CanonicalForm run() {
        Partition root;
        if (n_ > 0) {
            root.emplace_back(n_);
            std::iota(root.back().begin(), root.back().end(), 0);
        }
        std::vector<std::size_t> base;
        search(std::move(root), base);

        CanonicalForm out;
        out.n = n_;
        out.code = best_code_;
        out.labeling.assign(n_, 0);
        for (std::size_t p = 0; p < n_; ++p) out.labeling[best_order_[p]] = p;
        return out;
    }

private:
    using Cell = std::vector<std::size_t>;
    using Partition = std::vector<Cell>;

    bool adjacent(std::size_t u, std::size_t v) const noexcept { return (adj_[u] >> v) & 1U; }

    void refine(Partition& cells) const {
        std::vector<std::size_t> cell_of(n_);
        while (true) {
            for (std::size_t c = 0; c < cells.size(); ++c)
                for (auto v : cells[c]) cell_of[v] = c;
            Partition next;
            next.reserve(n_);
            for (const auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::vector<std::pair<std::vector<std::size_t>, std::size_t>> keyed;
                keyed.reserve(cell.size());
                for (auto v : cell) {
                    std::vector<std::size_t> sig(cells.size(), 0);
                    for (std::uint32_t nb = adj_[v]; nb; nb &= nb - 1)
                        ++sig[cell_of[static_cast<std::size_t>(std::countr_zero(nb))]];
                    keyed.emplace_back(std::move(sig), v);
                }
                std::sort(keyed.begin(), keyed.end());
                for (std::size_t i = 0; i < keyed.size(); ++i) {
                    if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
                    next.back().push_back(keyed[i].second);
                }
            }
            const bool stable = next.size() == cells.size();
            cells = std::move(next);
            if (stable) return;
        }
    }

    bool homogeneous(const Partition& cells) const {
        for (std::size_t a = 0; a < cells.size(); ++a) {
            for (std::size_t b = a; b < cells.size(); ++b) {
                std::optional<bool> seen;
                for (auto u : cells[a])
                    for (auto v : cells[b]) {
                        if (u == v) continue;
                        const bool e = adjacent(u, v);
                        if (!seen) seen = e;
                        else if (*seen != e) return false;
                    }
            }
        }
        return true;
    }

    std::uint32_t row_code(const std::vector<std::size_t>& order, std::size_t i) const {
        std::uint32_t row = 0;
        for (std::size_t j = 0; j < i; ++j)
            if (adjacent(order[i], order[j])) row |= std::uint32_t{1} << (31 - j);
        return row;
    }

    void leaf(const Partition& cells) {
        std::vector<std::size_t> order;
        order.reserve(n_);
        for (const auto& c : cells) order.insert(order.end(), c.begin(), c.end());
        std::vector<std::uint32_t> code(n_);
        for (std::size_t i = 0; i < n_; ++i) code[i] = row_code(order, i);
        if (!have_best_ || code < best_code_) {
            have_best_ = true;
            best_code_ = std::move(code);
            best_order_ = std::move(order);
        } else if (code == best_code_) {
            std::vector<std::size_t> gamma(n_);
            for (std::size_t p = 0; p < n_; ++p) gamma[best_order_[p]] = order[p];
            bool identity = true;
            for (std::size_t v = 0; v < n_ && identity; ++v) identity = gamma[v] == v;
            if (!identity) automorphisms_.push_back(std::move(gamma));
        }
    }

    /// -1, 0, +1 comparing the fixed prefix of this node against the best leaf.
    int compare_prefix(const Partition& cells) const {
        std::vector<std::size_t> order;
        for (const auto& c : cells) {
            if (c.size() != 1) break;
            order.push_back(c[0]);
        }
        for (std::size_t i = 0; i < order.size(); ++i) {
            const std::uint32_t row = row_code(order, i);
            if (row != best_code_[i]) return row < best_code_[i] ? -1 : 1;
        }
        return 0;
    }

    std::size_t find(std::vector<std::size_t>& parent, std::size_t v) const {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }

    void search(Partition cells, std::vector<std::size_t>& base) {
        refine(cells);
        if (have_best_ && compare_prefix(cells) > 0) return;
        const auto target = std::find_if(cells.begin(), cells.end(), [](const Cell& c) { return c.size() > 1; });
        if (target == cells.end() || homogeneous(cells)) {
            leaf(cells);
            return;
        }
        const std::size_t t = static_cast<std::size_t>(target - cells.begin());
        const Cell members = cells[t];
        std::vector<std::size_t> explored;
        for (auto v : members) {
            if (!explored.empty() && same_orbit_as_explored(v, explored, base)) continue;
            Partition child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != t) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.push_back({v});
                Cell rest;
                for (auto w : members)
                    if (w != v) rest.push_back(w);
                child.push_back(std::move(rest));
            }
            base.push_back(v);
            search(std::move(child), base);
            base.pop_back();
            explored.push_back(v);
        }
    }

    bool same_orbit_as_explored(std::size_t v, const std::vector<std::size_t>& explored,
                                const std::vector<std::size_t>& base) const {
        if (automorphisms_.empty()) return false;
        std::vector<std::size_t> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        for (const auto& gamma : automorphisms_) {
            bool fixes_base = true;
            for (auto b : base)
                if (gamma[b] != b) {
                    fixes_base = false;
                    break;
                }
            if (!fixes_base) continue;
            for (std::size_t u = 0; u < n_; ++u) {
                const std::size_t a = find(parent, u), b = find(parent, gamma[u]);
                if (a != b) parent[a] = b;
            }
        }
        const std::size_t root = find(parent, v);
        for (auto w : explored)
            if (find(parent, w) == root) return true;
        return false;
    }

    std::size_t n_;
    std::vector<std::uint32_t> adj_;
    bool have_best_ = false;
    std::vector<std::uint32_t> best_code_;
    std::vector<std::size_t> best_order_;
    std::vector<std::vector<std::size_t>> automorphisms_;
};

} // namespace detail

/// Canonical form: equal for two graphs iff they are isomorphic.
inline CanonicalForm canonical_label(const Graph& g) {
    require(g.order() <= kCanonicalCap, ErrorCode::size_cap, "canonical labeling is limited to 20 vertices");
    return detail::CanonicalSearch(g).run();
}

} // namespace chainseidel
