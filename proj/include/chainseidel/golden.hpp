#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "block_string.hpp"
#include "families.hpp"
#include "spectrum.hpp"

// Reference spectra of the cospectral pairs and integral chain graphs,
// transcribed as printed, and their exact recomputation.

namespace chainseidel {

using PrintedSpectrum = std::vector<std::pair<long long, std::size_t>>;

struct GoldenPairRow {
    long long n;
    const char* first;
    const char* second;
    PrintedSpectrum printed;
};

struct GoldenStringRow {
    const char* string;
    PrintedSpectrum printed;
};

inline const std::vector<GoldenPairRow>& golden_cospectral_rows() {
    static const std::vector<GoldenPairRow> rows{
        {14, "0 1^3 0^3 1^7", "0 1^6 0^6 1", {{-1, 11}, {-5, 1}, {5, 1}, {11, 1}}},
        {28, "0 1^6 0^6 1^15", "0 1^12 0^12 1^3", {{-1, 25}, {-9, 1}, {11, 1}, {23, 1}}},
        {42, "0 1^9 0^9 1^23", "0 1^18 0^18 1^5", {{-1, 39}, {-13, 1}, {17, 1}, {35, 1}}},
        {56, "0 1^12 0^12 1^31", "0 1^24 0^24 1^7", {{-1, 53}, {-17, 1}, {23, 1}, {47, 1}}},
        {70, "0 1^15 0^15 1^39", "0 1^30 0^30 1^9", {{-1, 67}, {-21, 1}, {29, 1}, {59, 1}}},
        {84, "0 1^18 0^18 1^47", "0 1^36 0^36 1^11", {{-1, 81}, {-25, 1}, {35, 1}, {71, 1}}},
        {98, "0 1^21 0^21 1^55", "0 1^42 0^42 1^13", {{-1, 95}, {-29, 1}, {41, 1}, {83, 1}}},
        {112, "0 1^24 0^24 1^63", "0 1^48 0^48 1^15", {{-1, 109}, {-33, 1}, {47, 1}, {95, 1}}},
        {126, "0 1^27 0^27 1^71", "0 1^54 0^54 1^17", {{-1, 123}, {-37, 1}, {53, 1}, {107, 1}}},
        {140, "0 1^30 0^30 1^79", "0 1^60 0^60 1^19", {{-1, 137}, {-41, 1}, {59, 1}, {119, 1}}},
    };
    return rows;
}

/// Strings 0^s 1^(2s) 0^(2s) 1^s for s = 1..10.
inline const std::vector<GoldenStringRow>& golden_balanced_rows() {
    static const std::vector<GoldenStringRow> rows{
        {"0 1^2 0^2 1", {{-1, 3}, {-3, 1}, {3, 2}}},
        {"0^2 1^4 0^4 1^2", {{-1, 9}, {-5, 1}, {7, 2}}},
        {"0^3 1^6 0^6 1^3", {{-1, 15}, {-7, 1}, {11, 2}}},
        {"0^4 1^8 0^8 1^4", {{-1, 21}, {-9, 1}, {15, 2}}},
        {"0^5 1^10 0^10 1^5", {{-1, 27}, {-11, 1}, {19, 2}}},
        {"0^6 1^12 0^12 1^6", {{-1, 33}, {-13, 1}, {23, 2}}},
        {"0^7 1^14 0^14 1^7", {{-1, 39}, {-15, 1}, {27, 2}}},
        {"0^8 1^16 0^16 1^8", {{-1, 45}, {-17, 1}, {31, 2}}},
        {"0^9 1^18 0^18 1^9", {{-1, 51}, {-19, 1}, {35, 2}}},
        {"0^10 1^20 0^20 1^10", {{-1, 57}, {-21, 1}, {39, 2}}},
    };
    return rows;
}

/// Strings 0 1^m 0^m 1^(n-2m-1).
inline const std::vector<GoldenStringRow>& golden_apex_rows() {
    static const std::vector<GoldenStringRow> rows{
        {"0 1^3 0^3 1^2", {{-1, 6}, {-4, 1}, {5, 2}}},
        {"0 1^3 0^3 1^24", {{-1, 28}, {-6, 1}, {5, 1}, {29, 1}}},
        {"0 1^4 0^4 1^48", {{-1, 54}, {-8, 1}, {7, 1}, {55, 1}}},
        {"0 1^6 0^6 1", {{-1, 11}, {-5, 1}, {5, 1}, {11, 1}}},
        {"0 1^5 0^5 1^80", {{-1, 88}, {-10, 1}, {9, 1}, {89, 1}}},
        {"0 1^4 0^4 1^3", {{-1, 9}, {-5, 1}, {7, 2}}},
        {"0 1^12 0^12 1", {{-1, 23}, {-7, 1}, {7, 1}, {23, 1}}},
        {"0 1^4 0^4 1^17", {{-1, 23}, {-7, 1}, {7, 1}, {23, 1}}},
        {"0 1^5 0^5 1^4", {{-1, 12}, {-6, 1}, {9, 2}}},
        {"0 1^6 0^6 1^26", {{-1, 36}, {-10, 1}, {11, 1}, {35, 1}}},
    };
    return rows;
}

struct GoldenCheck {
    std::string group; // "cospectral", "balanced", "apex"
    std::size_t row = 0; // 1-based
    std::vector<BlockString> strings;
    ExactSpectrum printed;
    std::vector<ExactSpectrum> computed;
    bool pass = false;
    std::string note;
};

inline std::vector<GoldenCheck> verify_golden_tables() {
    std::vector<GoldenCheck> out;
    auto check = [&](std::string group, std::size_t row, std::vector<const char*> texts, const PrintedSpectrum& printed) {
        GoldenCheck c;
        c.group = std::move(group);
        c.row = row;
        c.printed = ExactSpectrum::from_integers(printed);
        c.pass = true;
        for (const char* t : texts) {
            c.strings.push_back(parse_block_string(t));
            c.computed.push_back(exact_spectrum(c.strings.back()));
            c.pass = c.pass && c.computed.back() == c.printed && c.printed.order() == c.strings.back().n();
        }
        out.push_back(std::move(c));
        return &out.back();
    };
    const auto& pairs = golden_cospectral_rows();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        GoldenCheck* c = check("cospectral", i + 1, {pairs[i].first, pairs[i].second}, pairs[i].printed);
        c->pass = c->pass && static_cast<long long>(c->strings[0].n()) == pairs[i].n;
    }
    const auto& balanced = golden_balanced_rows();
    for (std::size_t i = 0; i < balanced.size(); ++i) check("balanced", i + 1, {balanced[i].string}, balanced[i].printed);
    const auto& apex = golden_apex_rows();
    for (std::size_t i = 0; i < apex.size(); ++i) {
        GoldenCheck* c = check("apex", i + 1, {apex[i].string}, apex[i].printed);
        if (i + 1 == apex.size())
            c->note = "printed -1^36 is n-3 for n = 1+6+6+26 = 39; the multiset totals 39 eigenvalues";
    }
    return out;
}

} // namespace chainseidel
