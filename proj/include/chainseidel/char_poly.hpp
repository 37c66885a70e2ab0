#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

// Exact characteristic polynomials by reduction to Hessenberg form modulo a
// sequence of word-size primes, recombined with the Chinese remainder theorem.
// Every coefficient of det(xI - M) is bounded by (1 + ||M||_inf)^n, so enough
// primes are taken to cover twice that bound.

namespace chainseidel {

inline constexpr std::size_t kCharPolyCap = 256;

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept { return a * b % p; }

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) noexcept {
    std::uint64_t r = 1;
    base %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, base, p);
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 32-bit odd n.
inline bool is_prime_u32(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL})
        if (n % small == 0) return n == small;
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 7ULL, 61ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Primes just below 2^31, largest first.
inline std::vector<std::uint64_t> crt_primes(std::size_t count) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t c = (std::uint64_t{1} << 31) - 1; out.size() < count; c -= 2)
        if (is_prime_u32(c)) out.push_back(c);
    return out;
}

/// Coefficients (lowest first) of det(xI - M) mod p.
inline std::vector<std::uint64_t> char_poly_mod(const IntMatrix& m, std::uint64_t p) {
    const std::size_t n = m.rows();
    std::vector<std::uint64_t> h(n * n);
    auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return h[i * n + j]; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::int64_t v = m(i, j) % static_cast<std::int64_t>(p);
            at(i, j) = static_cast<std::uint64_t>(v < 0 ? v + static_cast<std::int64_t>(p) : v);
        }

    // Similarity transform to upper Hessenberg form.
    for (std::size_t col = 0; col + 2 < n; ++col) {
        const std::size_t piv_row = col + 1;
        std::size_t i = piv_row;
        while (i < n && at(i, col) == 0) ++i;
        if (i == n) continue;
        if (i != piv_row) {
            for (std::size_t j = 0; j < n; ++j) std::swap(at(i, j), at(piv_row, j));
            for (std::size_t j = 0; j < n; ++j) std::swap(at(j, i), at(j, piv_row));
        }
        const std::uint64_t inv = pow_mod(at(piv_row, col), p - 2, p);
        for (i = piv_row + 1; i < n; ++i) {
            const std::uint64_t u = mul_mod(at(i, col), inv, p);
            if (u == 0) continue;
            for (std::size_t j = 0; j < n; ++j) at(i, j) = (at(i, j) + p - mul_mod(u, at(piv_row, j), p)) % p;
            for (std::size_t j = 0; j < n; ++j) at(j, piv_row) = (at(j, piv_row) + mul_mod(u, at(j, i), p)) % p;
        }
    }

    // Leading principal minors' characteristic polynomials.
    std::vector<std::vector<std::uint64_t>> chain(n + 1);
    chain[0] = {1};
    for (std::size_t k = 1; k <= n; ++k) {
        auto& cur = chain[k];
        const auto& prev = chain[k - 1];
        cur.assign(k + 1, 0);
        const std::uint64_t diag = at(k - 1, k - 1);
        for (std::size_t d = 0; d < prev.size(); ++d) {
            cur[d + 1] = (cur[d + 1] + prev[d]) % p;
            cur[d] = (cur[d] + p - mul_mod(diag, prev[d], p)) % p;
        }
        std::uint64_t t = 1;
        for (std::size_t i = k - 1; i >= 1; --i) {
            t = mul_mod(t, at(i, i - 1), p);
            const std::uint64_t coef = mul_mod(at(i - 1, k - 1), t, p);
            if (coef == 0) continue;
            const auto& lower = chain[i - 1];
            for (std::size_t d = 0; d < lower.size(); ++d) cur[d] = (cur[d] + p - mul_mod(coef, lower[d], p)) % p;
        }
    }
    return chain[n];
}

} // namespace detail

/// Monic characteristic polynomial det(xI - M) with exact integer coefficients.
inline Polynomial char_poly(const IntMatrix& m) {
    require(m.is_square(), ErrorCode::invalid_argument, "characteristic polynomial needs a square matrix");
    const std::size_t n = m.rows();
    require(n <= kCharPolyCap, ErrorCode::size_cap, "characteristic polynomial is limited to order 256");
    if (n == 0) return Polynomial{1};

    const double bound_bits = static_cast<double>(n) * std::log2(1.0 + static_cast<double>(m.max_abs_row_sum())) + 2.0;
    const auto prime_count = static_cast<std::size_t>(std::ceil(bound_bits / 30.0)) + 1;
    const auto primes = detail::crt_primes(prime_count);

    std::vector<BigInt> value(n + 1, 0);
    BigInt modulus = 1;
    for (const auto p : primes) {
        const auto residues = detail::char_poly_mod(m, p);
        const auto mod_p = static_cast<std::uint64_t>(modulus % p);
        const std::uint64_t inv = detail::pow_mod(mod_p, p - 2, p);
        for (std::size_t d = 0; d <= n; ++d) {
            const auto cur = static_cast<std::uint64_t>(value[d] % p);
            const std::uint64_t t = detail::mul_mod((residues[d] + p - cur) % p, inv, p);
            value[d] += modulus * t;
        }
        modulus *= p;
    }
    const BigInt half = modulus / 2;
    for (auto& v : value)
        if (v > half) v -= modulus;
    return Polynomial(std::move(value));
}

inline Polynomial char_poly(const SeidelMatrix& s) { return char_poly(s.matrix()); }
inline Polynomial char_poly(const QuotientMatrix& q) { return char_poly(q.matrix()); }

} // namespace chainseidel
