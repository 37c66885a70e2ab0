#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "switching.hpp"

namespace chainseidel {

inline constexpr std::size_t kCertificateCap = 16;

/// Invariant of a switching class up to relabeling (a two-graph).
///
/// `canonical` is the least canonical form among the class members in which
/// some vertex v is isolated (switching on N(v)); every class has exactly one
/// such member per vertex, so the minimum is a complete invariant.
/// `prefilter` is the multiset of sorted degree sequences over all 2^(n-1)
/// switchings with vertex 0 fixed outside U.
struct ClassCertificate {
    std::vector<std::pair<std::vector<int>, std::uint64_t>> prefilter; // (non-increasing sequence, count), sorted
    CanonicalForm canonical;

    /// 64-bit FNV-1a over the prefilter contents.
    std::uint64_t prefilter_hash() const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        auto mix = [&h](std::uint64_t v) {
            for (int i = 0; i < 8; ++i) {
                h ^= (v >> (8 * i)) & 0xffU;
                h *= 0x100000001b3ULL;
            }
        };
        for (const auto& [seq, count] : prefilter) {
            mix(seq.size());
            for (int d : seq) mix(static_cast<std::uint64_t>(d));
            mix(count);
        }
        return h;
    }

    std::string prefilter_hex() const {
        static constexpr char digits[] = "0123456789abcdef";
        std::string out(16, '0');
        std::uint64_t h = prefilter_hash();
        for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        return out;
    }

    friend bool operator==(const ClassCertificate& a, const ClassCertificate& b) {
        return a.prefilter == b.prefilter && a.canonical == b.canonical;
    }
};

/// Multiset of switched degree sequences, the cheap half of the certificate.
inline std::vector<std::pair<std::vector<int>, std::uint64_t>> switching_degree_prefilter(const Graph& g) {
    const std::size_t n = g.order();
    require(n >= 1 && n <= kCertificateCap, ErrorCode::size_cap, "class certificate is limited to 1..16 vertices");
    std::map<std::vector<int>, std::uint64_t> counts;
    std::vector<int> seq(n);
    detail::for_each_switching(g, 0, std::uint64_t{1} << (n - 1),
                               [&](std::uint64_t, std::uint64_t, std::span<const int> deg) {
                                   seq.assign(deg.begin(), deg.end());
                                   std::sort(seq.begin(), seq.end(), std::greater<>());
                                   ++counts[seq];
                               });
    return {counts.begin(), counts.end()};
}

inline ClassCertificate class_certificate(const Graph& g) {
    ClassCertificate cert;
    cert.prefilter = switching_degree_prefilter(g);
    for (std::size_t v = 0; v < g.order(); ++v) {
        CanonicalForm form = canonical_label(switch_on_subset(g, g.neighbors(v)));
        if (v == 0 || form < cert.canonical) cert.canonical = std::move(form);
    }
    return cert;
}

enum class EquivalenceMode {
    switching_only,        // h is a switching of g under the identity labeling
    switching_isomorphism, // h is isomorphic to some switching of g
};

inline bool switching_equivalent(const Graph& g, const Graph& h, EquivalenceMode mode) {
    require(g.order() == h.order(), ErrorCode::invalid_argument, "graphs differ in order");
    const std::size_t n = g.order();
    if (mode == EquivalenceMode::switching_only) {
        if (n == 0) return true;
        // With vertex 0 outside U, U is forced: the vertices whose adjacency to 0 differs.
        VertexSet subset(n);
        for (std::size_t v = 1; v < n; ++v)
            if (g.adjacent(0, v) != h.adjacent(0, v)) subset.insert(v);
        return switch_on_subset(g, subset) == h;
    }
    require(n <= kCertificateCap, ErrorCode::size_cap, "switching-isomorphism test is limited to 16 vertices");
    if (n == 0) return true;
    return class_certificate(g) == class_certificate(h);
}

} // namespace chainseidel
