#include <random>

#include <gtest/gtest.h>

#include <chainseidel/chain_graph.hpp>
#include <chainseidel/char_poly.hpp>
#include <chainseidel/matrix.hpp>

#include "support.hpp"

using namespace chainseidel;

namespace {

// det(xI - M) by cofactor expansion along the first row.
Polynomial cofactor_char_poly(const std::vector<std::vector<Polynomial>>& a) {
    const std::size_t n = a.size();
    if (n == 1) return a[0][0];
    Polynomial det;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Polynomial>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Polynomial> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(a[i][c]);
            minor.push_back(std::move(row));
        }
        const Polynomial term = a[0][j] * cofactor_char_poly(minor);
        det = j % 2 == 0 ? det + term : det - term;
    }
    return det;
}

Polynomial oracle(const IntMatrix& m) {
    std::vector<std::vector<Polynomial>> a(m.rows(), std::vector<Polynomial>(m.rows()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j)
            a[i][j] = i == j ? Polynomial{-m(i, j), 1} : Polynomial{-m(i, j)};
    return cofactor_char_poly(a);
}

} // namespace

TEST(CharPoly, TwoByTwo) { EXPECT_EQ(char_poly(IntMatrix{{0, -1}, {-1, 0}}), (Polynomial{-1, 0, 1})); }

TEST(CharPoly, QuotientOfSmallBalancedString) {
    // roots -1, -3, 3, 3
    const Polynomial expected = Polynomial{1, 1} * Polynomial{3, 1} * Polynomial{-3, 1}.pow(2);
    EXPECT_EQ(char_poly(quotient_matrix(BlockString{{1, 2}, {2, 1}})), expected);
}

TEST(CharPoly, CofactorOracle) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 25; ++trial) {
            IntMatrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
            EXPECT_EQ(char_poly(m), oracle(m)) << "n=" << n;
        }
    }
}

TEST(CharPoly, LargeEntries) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> entry(-1'000'000'000, 1'000'000'000);
    for (int trial = 0; trial < 10; ++trial) {
        IntMatrix m(5, 5);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) m(i, j) = entry(rng);
        EXPECT_EQ(char_poly(m), oracle(m));
    }
}

TEST(CharPoly, MonicWithZeroTraceCoefficient) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = build_chain_graph(testsupport::random_block_string(rng, 5, 30));
        const Polynomial p = char_poly(seidel_matrix(g));
        EXPECT_EQ(p.degree(), static_cast<long>(g.order()));
        EXPECT_EQ(p.leading(), 1);
        EXPECT_EQ(p.coeff(g.order() - 1), 0);
    }
}

TEST(CharPoly, FullSeidelFactorsThroughQuotient) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const auto b = testsupport::random_block_string(rng, 6, 40);
        const Polynomial full = char_poly(seidel_matrix(build_chain_graph(b)));
        const Polynomial quotient = char_poly(quotient_matrix(b));
        EXPECT_EQ(full, quotient * (Polynomial{1, 1}).pow(b.n() - 2 * b.k())) << b.render();
    }
}

TEST(CharPoly, SizeCap) { EXPECT_THROW(char_poly(IntMatrix(257, 257)), Error); }
