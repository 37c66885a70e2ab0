#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include <chainseidel/certificate.hpp>
#include <chainseidel/chain_graph.hpp>
#include <chainseidel/matrix.hpp>
#include <chainseidel/numeric.hpp>
#include <chainseidel/switching.hpp>

#include "support.hpp"

using namespace chainseidel;

TEST(Switch, Identities) {
    const Graph k2 = Graph::from_edges(2, {{0, 1}});
    EXPECT_EQ(switch_on_subset(k2, VertexSet(2)), k2);
    EXPECT_EQ(switch_on_subset(k2, VertexSet::full(2)), k2);
    EXPECT_EQ(switch_on_subset(k2, VertexSet::from_mask(2, 1)), Graph(2));
    EXPECT_THROW(switch_on_subset(k2, VertexSet(3)), Error);
}

TEST(Switch, InvolutionComplementConjugation) {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 24;
        const Graph g = testsupport::random_graph(rng, n);
        const VertexSet u = testsupport::random_subset(rng, n);
        const Graph h = switch_on_subset(g, u);
        EXPECT_EQ(switch_on_subset(h, u), g);
        EXPECT_EQ(switch_on_subset(g, u.complement()), h);
        const auto s = seidel_matrix(g), t = seidel_matrix(h);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const int di = u.contains(i) ? -1 : 1, dj = u.contains(j) ? -1 : 1;
                EXPECT_EQ(t(i, j), di * s(i, j) * dj);
            }
        const auto a = numeric_spectrum(s), b = numeric_spectrum(t);
        for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(a[i], b[i], 1e-8);
    }
}

TEST(Switch, IncrementalDegreesMatchRebuild) {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 2 + rng() % 9;
        const Graph g = testsupport::random_graph(rng, n);
        std::uint64_t seen = 0;
        detail::for_each_switching(g, 0, std::uint64_t{1} << (n - 1),
                                   [&](std::uint64_t rank, std::uint64_t mask, std::span<const int> deg) {
                                       EXPECT_EQ(mask, detail::gray(rank) << 1);
                                       const Graph h = switch_on_subset(g, VertexSet::from_mask(n, mask));
                                       for (std::size_t v = 0; v < n; ++v)
                                           EXPECT_EQ(deg[v], static_cast<int>(h.degree(v)));
                                       ++seen;
                                   });
        EXPECT_EQ(seen, std::uint64_t{1} << (n - 1));
    }
}

TEST(Switch, PartialRangeStartsMidSequence) {
    std::mt19937_64 rng(107);
    const Graph g = testsupport::random_graph(rng, 9);
    detail::for_each_switching(g, 37, 90, [&](std::uint64_t, std::uint64_t mask, std::span<const int> deg) {
        const Graph h = switch_on_subset(g, VertexSet::from_mask(9, mask));
        for (std::size_t v = 0; v < 9; ++v) EXPECT_EQ(deg[v], static_cast<int>(h.degree(v)));
    });
}

TEST(Search, FifteenVertexClass) {
    const auto g = build_chain_graph(parse_block_string("0 1^5 0^5 1^4"));
    // The class does hold one regular graph: switching on the last two cells gives degree 10 everywhere,
    // matching the Seidel eigenvalue 14 - 2*10 = -6.
    const auto regular = search_class_by_degree_profile(g, DegreeProfile::regular(), {true, 1});
    EXPECT_EQ(regular.subsets_examined, 16384U);
    ASSERT_EQ(regular.match_count, 1U);
    EXPECT_EQ(regular.witnesses[0].split_per_cell, (std::vector<std::size_t>{0, 0, 5, 4}));
    EXPECT_EQ(regular.witnesses[0].degrees, std::vector<int>(15, 10));
    EXPECT_EQ(degree_sequence(switch_on_subset(g.graph(), regular.witnesses[0].subset)), std::vector<int>(15, 10));

    const auto bireg = search_class_by_degree_profile(g, DegreeProfile::biregular(7, 8), {true, 1});
    EXPECT_EQ(bireg.match_count, 1000U);
    EXPECT_EQ(bireg.witnesses.size(), bireg.match_count);
    const std::vector<std::size_t> split{0, 2, 3, 2};
    EXPECT_TRUE(std::any_of(bireg.witnesses.begin(), bireg.witnesses.end(),
                            [&](const SwitchingWitness& w) { return w.split_per_cell == split; }));
    for (const auto& w : bireg.witnesses) {
        EXPECT_EQ(degree_sequence(switch_on_subset(g.graph(), w.subset)), w.degrees);
        EXPECT_EQ(g.split_per_cell(w.subset), *w.split_per_cell);
        EXPECT_FALSE(w.subset.contains(0));
    }
}

TEST(Search, ThreadsMergeDeterministically) {
    const auto g = build_chain_graph(parse_block_string("0 1^5 0^5 1^4"));
    const auto one = search_class_by_degree_profile(g, DegreeProfile::any_biregular(), {true, 1});
    const auto four = search_class_by_degree_profile(g, DegreeProfile::any_biregular(), {true, 4});
    EXPECT_EQ(one.match_count, four.match_count);
    EXPECT_EQ(one.witnesses, four.witnesses);
    const auto first1 = search_class_by_degree_profile(g, DegreeProfile::any_biregular(), {false, 1});
    const auto first4 = search_class_by_degree_profile(g, DegreeProfile::any_biregular(), {false, 3});
    ASSERT_EQ(first1.witnesses.size(), 1U);
    EXPECT_EQ(first1.witnesses, first4.witnesses);
    EXPECT_EQ(first1.match_count, one.match_count);
}

TEST(Search, RegularInSmallBalancedClass) {
    const auto g = build_chain_graph(parse_block_string("0 1^2 0^2 1"));
    const auto r = search_class_by_degree_profile(g, DegreeProfile::regular());
    ASSERT_FALSE(r.witnesses.empty());
    EXPECT_EQ(r.witnesses[0].degrees, (std::vector<int>(6, 3)));
}

TEST(Search, ProfileParsingAndCaps) {
    EXPECT_EQ(DegreeProfile::biregular(8, 7).describe(), "biregular:7,8");
    EXPECT_THROW(DegreeProfile::biregular(3, 3), Error);
    const int d[] = {7, 8, 8, 7};
    EXPECT_TRUE(DegreeProfile::biregular(7, 8)(d));
    EXPECT_FALSE(DegreeProfile::biregular(6, 8)(d));
    EXPECT_FALSE(DegreeProfile::regular()(d));
    EXPECT_THROW(search_class_by_degree_profile(Graph(31), DegreeProfile::regular()), Error);
}

TEST(Equivalence, SwitchedGraphsBothModes) {
    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng() % 10;
        const Graph g = testsupport::random_graph(rng, n);
        const Graph h = switch_on_subset(g, testsupport::random_subset(rng, n));
        EXPECT_TRUE(switching_equivalent(g, h, EquivalenceMode::switching_only));
        EXPECT_TRUE(switching_equivalent(g, h, EquivalenceMode::switching_isomorphism));
    }
}

TEST(Equivalence, RelabelingSeparatesModes) {
    std::mt19937_64 rng(113);
    bool separated = false;
    for (int trial = 0; trial < 50 && !separated; ++trial) {
        const Graph g = build_chain_graph(testsupport::random_block_string(rng, 3, 9)).graph();
        const Graph h = g.relabeled(testsupport::random_permutation(rng, g.order()));
        EXPECT_TRUE(switching_equivalent(g, h, EquivalenceMode::switching_isomorphism));
        separated = !switching_equivalent(g, h, EquivalenceMode::switching_only);
    }
    EXPECT_TRUE(separated);
}

TEST(Equivalence, PairAtFourteenIsInequivalent) {
    const Graph a = build_chain_graph(parse_block_string("0 1^3 0^3 1^7")).graph();
    const Graph b = build_chain_graph(parse_block_string("0 1^6 0^6 1")).graph();
    EXPECT_FALSE(switching_equivalent(a, b, EquivalenceMode::switching_isomorphism));
    EXPECT_FALSE(switching_equivalent(a, b, EquivalenceMode::switching_only));
    EXPECT_FALSE(class_certificate(a) == class_certificate(b));
}

TEST(Equivalence, Errors) {
    EXPECT_THROW(switching_equivalent(Graph(3), Graph(4), EquivalenceMode::switching_only), Error);
    EXPECT_THROW(switching_equivalent(Graph(17), Graph(17), EquivalenceMode::switching_isomorphism), Error);
    EXPECT_TRUE(switching_equivalent(Graph(17), Graph(17), EquivalenceMode::switching_only));
}

TEST(Certificate, ClassAndLabelInvariance) {
    std::mt19937_64 rng(127);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng() % 10;
        const Graph g = testsupport::random_graph(rng, n);
        const auto cert = class_certificate(g);
        EXPECT_EQ(cert, class_certificate(switch_on_subset(g, testsupport::random_subset(rng, n))));
        EXPECT_EQ(cert, class_certificate(g.relabeled(testsupport::random_permutation(rng, n))));
        EXPECT_EQ(cert.prefilter_hex().size(), 16U);
    }
}

TEST(Certificate, SeparatesClassesAgreeingWithBruteForce) {
    // Brute force on 5 vertices: h ~ g iff some relabeling of h is a switching of g.
    std::mt19937_64 rng(131);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = testsupport::random_graph(rng, 5), h = testsupport::random_graph(rng, 5);
        std::vector<std::size_t> perm{0, 1, 2, 3, 4};
        bool brute = false;
        do {
            brute = switching_equivalent(g, h.relabeled(perm), EquivalenceMode::switching_only);
        } while (!brute && std::next_permutation(perm.begin(), perm.end()));
        EXPECT_EQ(brute, switching_equivalent(g, h, EquivalenceMode::switching_isomorphism));
    }
}

TEST(Certificate, InequivalenceSweepSmall) {
    // strings 0^a1^b 0... : 0 1^a1 0^a1 1^b1 vs 0 1^a2 0^a2 1^b2 with 2a1+b1 = 2a2+b2
    for (std::size_t total = 4; total <= 11; ++total)
        for (std::size_t a1 = 1; 2 * a1 + 1 < total; ++a1)
            for (std::size_t a2 = a1 + 1; 2 * a2 + 1 < total; ++a2) {
                const Graph x = build_chain_graph(BlockString{{1, a1}, {a1, total - 1 - 2 * a1}}).graph();
                const Graph y = build_chain_graph(BlockString{{1, a2}, {a2, total - 1 - 2 * a2}}).graph();
                EXPECT_FALSE(switching_equivalent(x, y, EquivalenceMode::switching_isomorphism))
                    << total << " " << a1 << " " << a2;
            }
}
