#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "block_string.hpp"
#include "error.hpp"
#include "spectrum.hpp"

namespace chainseidel {

// ---------------------------------------------------------------------------
// Cospectral pairs 0 1^m 0^m 1^(2m+r) and 0 1^(2m) 0^(2m) 1^r, m = 3(r+1)/2.

struct CospectralPair {
    long long r = 0;
    long long m = 0;
    long long n = 0;
    BlockString first;
    BlockString second;
    ExactSpectrum predicted; // {-1^(n-3), -(2m-r), 2m-1, 4m-1}

    long long predicted_min() const { return -(2 * m - r); }
    long long predicted_radius() const { return n - (r + 2); }
};

inline CospectralPair generate_cospectral_pair(long long r) {
    require(r >= 1 && r % 2 == 1, ErrorCode::invalid_argument, "cospectral pair needs an odd r >= 1");
    CospectralPair p;
    p.r = r;
    p.m = 3 * (r + 1) / 2;
    p.n = 4 * p.m + r + 1;
    const auto m = static_cast<std::size_t>(p.m);
    const auto rr = static_cast<std::size_t>(r);
    p.first = BlockString{{1, m}, {m, 2 * m + rr}};
    p.second = BlockString{{1, 2 * m}, {2 * m, rr}};
    p.predicted = ExactSpectrum::from_integers({{-1, static_cast<std::size_t>(p.n - 3)},
                                                {-(2 * p.m - r), 1},
                                                {2 * p.m - 1, 1},
                                                {4 * p.m - 1, 1}});
    return p;
}

// ---------------------------------------------------------------------------
// Integral family 0^s 1^(2s) 0^(2s) 1^s.

struct BalancedFamilyMember {
    long long s = 0;
    BlockString string;
    ExactSpectrum predicted; // {-1^(6s-3), -(2s+1), (4s-1)^2}
};

inline BalancedFamilyMember balanced_integral_family(long long s) {
    require(s >= 1, ErrorCode::invalid_argument, "balanced family needs s >= 1");
    const auto u = static_cast<std::size_t>(s);
    return {s, BlockString{{u, 2 * u}, {2 * u, u}},
            ExactSpectrum::from_integers({{-1, static_cast<std::size_t>(6 * s - 3)}, {-(2 * s + 1), 1}, {4 * s - 1, 2}})};
}

// ---------------------------------------------------------------------------
// Integral members of 0 1^m 0^m 1^(n-2m-1).

enum class IntegralFamily { F1, F2, F3, F4, F5, F6, Sporadic };

inline constexpr std::array<IntegralFamily, 7> kIntegralFamilies{IntegralFamily::F1, IntegralFamily::F2,
                                                                 IntegralFamily::F3, IntegralFamily::F4,
                                                                 IntegralFamily::F5, IntegralFamily::F6,
                                                                 IntegralFamily::Sporadic};

inline constexpr std::array<std::pair<long long, long long>, 3> kSporadicPairs{{{6, 2}, {14, 6}, {12, 4}}};

inline std::string_view to_string(IntegralFamily f) noexcept {
    switch (f) {
    case IntegralFamily::F1: return "F1";
    case IntegralFamily::F2: return "F2";
    case IntegralFamily::F3: return "F3";
    case IntegralFamily::F4: return "F4";
    case IntegralFamily::F5: return "F5";
    case IntegralFamily::F6: return "F6";
    case IntegralFamily::Sporadic: return "S";
    }
    return "?";
}

inline IntegralFamily parse_integral_family(std::string_view id) {
    for (auto f : kIntegralFamilies)
        if (to_string(f) == id) return f;
    throw Error(ErrorCode::invalid_argument, "unknown integral family \"" + std::string(id) + "\"");
}

/// Smallest admissible parameter; for the sporadic list r is an index 0..2.
inline long long min_parameter(IntegralFamily f) noexcept {
    switch (f) {
    case IntegralFamily::F1:
    case IntegralFamily::F2:
    case IntegralFamily::F3: return 2;
    case IntegralFamily::F4:
    case IntegralFamily::F6: return 1;
    case IntegralFamily::F5: return 3;
    case IntegralFamily::Sporadic: return 0;
    }
    return 0;
}

struct ApexParams {
    long long n = 0;
    long long m = 0;
    friend bool operator==(const ApexParams&, const ApexParams&) = default;
};

inline ApexParams integral_family_params(IntegralFamily f, long long r) {
    require(r >= min_parameter(f), ErrorCode::invalid_argument,
            std::string(to_string(f)) + " needs r >= " + std::to_string(min_parameter(f)));
    switch (f) {
    case IntegralFamily::F1: return {3 * r, r};
    case IntegralFamily::F2: return {13 * r, 6 * r};
    case IntegralFamily::F3: return {13 * r, 2 * r};
    case IntegralFamily::F4: return {2 * r * r + 2 * r + 2, r * r + r};
    case IntegralFamily::F5: return {4 * r * r - 2 * r + 1, r};
    case IntegralFamily::F6: return {4 * r * r + 4 * r + 4, 2 * r * r + 2 * r};
    case IntegralFamily::Sporadic:
        require(r <= 2, ErrorCode::invalid_argument, "sporadic index must be 0, 1 or 2");
        return {kSporadicPairs[static_cast<std::size_t>(r)].first, kSporadicPairs[static_cast<std::size_t>(r)].second};
    }
    return {};
}

/// (n - 2m)(n + 6m), the discriminant deciding integrality.
inline BigInt apex_discriminant(long long n, long long m) { return BigInt(n - 2 * m) * BigInt(n + 6 * m); }

inline void require_apex(long long n, long long m) {
    require(m >= 1 && n > 2 * m + 1, ErrorCode::invalid_argument,
            "apex string needs m >= 1 and n > 2m + 1 (got n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
}

/// 0 1^m 0^m 1^(n-2m-1)
inline BlockString apex_string(long long n, long long m) {
    require_apex(n, m);
    const auto mm = static_cast<std::size_t>(m);
    return BlockString{{1, mm}, {mm, static_cast<std::size_t>(n - 2 * m - 1)}};
}

/// Closed-form spectrum {-1^(n-3), 2m-1, -(m+1) + (n +- sqrt(D))/2}.
inline ExactSpectrum apex_spectrum(long long n, long long m) {
    require_apex(n, m);
    const BigInt disc = apex_discriminant(n, m);
    std::vector<SpectrumEntry> entries{{BigInt(-1), static_cast<std::size_t>(n - 3)}, {BigInt(2 * m - 1), 1}};
    const BigInt centre2 = n - 2 * m - 2; // twice -(m+1) + n/2
    if (is_perfect_square(disc)) {
        const BigInt root = integer_sqrt(disc);
        entries.push_back({BigInt((centre2 - root) / 2), 1});
        entries.push_back({BigInt((centre2 + root) / 2), 1});
    } else {
        entries.push_back({detail::make_surd(centre2, -1, disc, 2), 1});
        entries.push_back({detail::make_surd(centre2, +1, disc, 2), 1});
    }
    return ExactSpectrum(std::move(entries));
}

/// Every (family, r) within range that produces (n, m).
inline std::vector<std::pair<IntegralFamily, long long>> generating_families(long long n, long long m) {
    std::vector<std::pair<IntegralFamily, long long>> out;
    auto consider = [&](IntegralFamily f, long long r) {
        if (r >= min_parameter(f) && integral_family_params(f, r) == ApexParams{n, m}) out.emplace_back(f, r);
    };
    consider(IntegralFamily::F1, m);
    if (m % 6 == 0) consider(IntegralFamily::F2, m / 6);
    if (m % 2 == 0) consider(IntegralFamily::F3, m / 2);
    // m = r^2 + r  <=>  4m + 1 = (2r + 1)^2
    if (const BigInt q = 4 * BigInt(m) + 1; is_perfect_square(q)) {
        const auto r = (integer_sqrt(q).convert_to<long long>() - 1) / 2;
        if (r >= 1) consider(IntegralFamily::F4, r);
    }
    consider(IntegralFamily::F5, m);
    if (m % 2 == 0) {
        if (const BigInt q = 2 * BigInt(m) + 1; is_perfect_square(q)) {
            const auto r = (integer_sqrt(q).convert_to<long long>() - 1) / 2;
            if (r >= 1) consider(IntegralFamily::F6, r);
        }
    }
    for (std::size_t i = 0; i < kSporadicPairs.size(); ++i)
        if (kSporadicPairs[i] == std::pair<long long, long long>{n, m}) out.emplace_back(IntegralFamily::Sporadic, i);
    return out;
}

inline constexpr long long kScanCap = 500;

struct ScanHit {
    long long n = 0;
    long long m = 0;
    std::vector<std::pair<IntegralFamily, long long>> families; // empty: unclassified
    bool verified = false; // exact spectrum of the string is integral
    ExactSpectrum spectrum;
};

/// All (n, m) with 2m + 1 < n <= n_max whose discriminant is a perfect
/// square, each checked by an exact spectrum computation. Ordered by (n, m).
inline std::vector<ScanHit> scan_seidel_integral(long long n_max, unsigned threads = 1) {
    require(n_max >= 0 && n_max <= kScanCap, ErrorCode::size_cap, "scan is limited to n_max <= 500");
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    const long long first = 4;
    const long long count = std::max(0LL, n_max - first + 1);
    const long long chunks = std::max(1LL, std::min<long long>(threads, count));
    std::vector<std::vector<ScanHit>> partial(static_cast<std::size_t>(chunks));
    auto work = [&](long long c) {
        const long long lo = first + count * c / chunks;
        const long long hi = first + count * (c + 1) / chunks;
        for (long long n = lo; n < hi; ++n) {
            for (long long m = 1; 2 * m + 1 < n; ++m) {
                if (!is_perfect_square(apex_discriminant(n, m))) continue;
                ScanHit hit{n, m, generating_families(n, m), false, exact_spectrum(apex_string(n, m))};
                hit.verified = is_integral(hit.spectrum);
                partial[static_cast<std::size_t>(c)].push_back(std::move(hit));
            }
        }
    };
    if (chunks == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (long long c = 0; c < chunks; ++c) pool.emplace_back(work, c);
        for (auto& t : pool) t.join();
    }
    std::vector<ScanHit> out;
    for (auto& part : partial)
        for (auto& h : part) out.push_back(std::move(h));
    return out;
}

} // namespace chainseidel
