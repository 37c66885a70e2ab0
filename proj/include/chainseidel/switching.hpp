#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "chain_graph.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace chainseidel {

/// Complements every edge/non-edge between U and V \ U.
inline Graph switch_on_subset(const Graph& g, const VertexSet& subset) {
    require(subset.size() == g.order(), ErrorCode::invalid_argument, "subset size does not match graph order");
    Graph h(g.order());
    for (std::size_t u = 0; u < g.order(); ++u) {
        for (std::size_t v = u + 1; v < g.order(); ++v) {
            const bool cut = subset.contains(u) != subset.contains(v);
            if (g.adjacent(u, v) != cut) h.add_edge(u, v);
        }
    }
    return h;
}

inline constexpr std::size_t kSwitchSearchCap = 30;

/// Vertex subset with the degree multiset of the graph switched on it.
struct SwitchingWitness {
    VertexSet subset;
    std::vector<int> degrees; // non-increasing
    std::optional<std::vector<std::size_t>> split_per_cell;
    std::uint64_t rank = 0; // Gray-code rank in the enumeration
    friend bool operator==(const SwitchingWitness&, const SwitchingWitness&) = default;
};

/// Predicate on the (unsorted) degree list of a switched graph.
class DegreeProfile {
public:
    enum class Kind { regular, biregular, any_biregular };

    static DegreeProfile regular() { return DegreeProfile(Kind::regular, 0, 0); }
    /// Exactly the two distinct degrees a and b.
    static DegreeProfile biregular(int a, int b) {
        require(a != b, ErrorCode::invalid_argument, "bi-regular profile needs two different degrees");
        return DegreeProfile(Kind::biregular, std::min(a, b), std::max(a, b));
    }
    /// Any two distinct degrees.
    static DegreeProfile any_biregular() { return DegreeProfile(Kind::any_biregular, 0, 0); }

    Kind kind() const noexcept { return kind_; }
    int low() const noexcept { return low_; }
    int high() const noexcept { return high_; }

    bool operator()(std::span<const int> degrees) const noexcept {
        if (degrees.empty()) return kind_ == Kind::regular;
        int lo = degrees[0], hi = degrees[0];
        for (int d : degrees) {
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
        switch (kind_) {
        case Kind::regular: return lo == hi;
        case Kind::biregular:
            if (lo != low_ || hi != high_) return false;
            for (int d : degrees)
                if (d != lo && d != hi) return false;
            return true;
        case Kind::any_biregular:
            if (lo == hi) return false;
            for (int d : degrees)
                if (d != lo && d != hi) return false;
            return true;
        }
        return false;
    }

    std::string describe() const {
        switch (kind_) {
        case Kind::regular: return "regular";
        case Kind::biregular: return "biregular:" + std::to_string(low_) + "," + std::to_string(high_);
        case Kind::any_biregular: return "biregular";
        }
        return "";
    }

private:
    DegreeProfile(Kind kind, int low, int high) : kind_(kind), low_(low), high_(high) {}

    Kind kind_;
    int low_;
    int high_;
};

struct SearchOptions {
    bool collect_all = false;
    unsigned threads = 1; // 0 selects hardware concurrency
};

struct SearchResult {
    std::uint64_t subsets_examined = 0;
    std::uint64_t match_count = 0;
    std::vector<SwitchingWitness> witnesses; // first match only unless collect_all
};

namespace detail {

inline std::uint64_t gray(std::uint64_t i) noexcept { return i ^ (i >> 1); }

/// Visits the switchings of g ranked [begin, end) in Gray-code order over
/// subsets of {1, .., n-1}; vertex 0 never enters U. The callback receives
/// (rank, subset mask, unsorted switched degrees).
template <class Visit>
void for_each_switching(const Graph& g, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
    const std::size_t n = g.order();
    std::vector<std::uint64_t> adj(n);
    std::vector<int> base(n);
    for (std::size_t v = 0; v < n; ++v) {
        adj[v] = g.neighbors(v).mask();
        base[v] = static_cast<int>(g.degree(v));
    }
    const int order = static_cast<int>(n);
    std::uint64_t mask = gray(begin) << 1;
    std::vector<int> inside(n); // |N(v) ∩ U|
    for (std::size_t v = 0; v < n; ++v) inside[v] = std::popcount(adj[v] & mask);
    int size = std::popcount(mask);
    std::vector<int> degrees(n);

    for (std::uint64_t rank = begin; rank < end; ++rank) {
        if (rank != begin) {
            const auto w = static_cast<std::size_t>(std::countr_zero(rank)) + 1;
            const std::uint64_t bit = std::uint64_t{1} << w;
            const int delta = (mask & bit) ? -1 : 1;
            mask ^= bit;
            size += delta;
            for (std::uint64_t nb = adj[w]; nb; nb &= nb - 1) inside[static_cast<std::size_t>(std::countr_zero(nb))] += delta;
        }
        for (std::size_t v = 0; v < n; ++v) {
            const int c = inside[v];
            degrees[v] = (mask >> v) & 1U ? 2 * c + order - size - base[v] : base[v] - 2 * c + size;
        }
        visit(rank, mask, std::span<const int>(degrees));
    }
}

template <class Fn>
void run_chunks(std::uint64_t total, unsigned threads, Fn&& fn) {
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    const std::uint64_t chunks = std::min<std::uint64_t>(threads, std::max<std::uint64_t>(total, 1));
    if (chunks <= 1) {
        fn(0, std::uint64_t{0}, total);
        return;
    }
    std::vector<std::thread> pool;
    for (std::uint64_t c = 0; c < chunks; ++c) {
        const std::uint64_t lo = total * c / chunks;
        const std::uint64_t hi = total * (c + 1) / chunks;
        pool.emplace_back([&fn, c, lo, hi] { fn(static_cast<std::size_t>(c), lo, hi); });
    }
    for (auto& t : pool) t.join();
}

} // namespace detail

/// Exhaustive search of the switching class of g (all 2^(n-1) switchings
/// with vertex 0 outside U) for switched graphs whose degree list satisfies
/// `profile`. Degrees are maintained incrementally from cut counts.
template <class Predicate>
SearchResult search_class_by_degree_profile(const Graph& g, Predicate&& profile, const SearchOptions& options = {},
                                            const std::vector<Cell>* cells = nullptr) {
    const std::size_t n = g.order();
    require(n >= 1, ErrorCode::invalid_argument, "switching search needs at least one vertex");
    require(n <= kSwitchSearchCap, ErrorCode::size_cap, "switching search is limited to 30 vertices");
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    unsigned threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.threads;

    std::vector<SearchResult> partial(threads);
    detail::run_chunks(total, threads, [&](std::size_t chunk, std::uint64_t lo, std::uint64_t hi) {
        SearchResult& out = partial[chunk];
        detail::for_each_switching(g, lo, hi, [&](std::uint64_t rank, std::uint64_t mask, std::span<const int> deg) {
            ++out.subsets_examined;
            if (!profile(deg)) return;
            ++out.match_count;
            if (!options.collect_all && !out.witnesses.empty()) return;
            SwitchingWitness w;
            w.subset = VertexSet::from_mask(n, mask);
            w.degrees.assign(deg.begin(), deg.end());
            std::sort(w.degrees.begin(), w.degrees.end(), std::greater<>());
            w.rank = rank;
            if (cells) {
                std::vector<std::size_t> split(cells->size(), 0);
                for (std::size_t c = 0; c < cells->size(); ++c)
                    for (std::size_t v = (*cells)[c].begin; v < (*cells)[c].end; ++v)
                        if ((mask >> v) & 1U) ++split[c];
                w.split_per_cell = std::move(split);
            }
            out.witnesses.push_back(std::move(w));
        });
    });

    SearchResult merged;
    for (auto& part : partial) {
        merged.subsets_examined += part.subsets_examined;
        merged.match_count += part.match_count;
        for (auto& w : part.witnesses) {
            if (!options.collect_all && !merged.witnesses.empty()) break;
            merged.witnesses.push_back(std::move(w));
        }
    }
    return merged;
}

template <class Predicate>
SearchResult search_class_by_degree_profile(const ChainGraph& g, Predicate&& profile, const SearchOptions& options = {}) {
    return search_class_by_degree_profile(g.graph(), std::forward<Predicate>(profile), options, &g.cells());
}

} // namespace chainseidel
