#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace chainseidel {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial with integer coefficients, lowest degree first.
/// The zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }
    Polynomial(std::initializer_list<long long> coeffs) {
        for (auto v : coeffs) c_.emplace_back(v);
        normalize();
    }

    static Polynomial monomial(std::size_t degree) {
        std::vector<BigInt> c(degree + 1, 0);
        c[degree] = 1;
        return Polynomial(std::move(c));
    }

    /// x - root
    static Polynomial linear_root(const BigInt& root) { return Polynomial(std::vector<BigInt>{-root, 1}); }

    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const noexcept { return c_; }
    BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
    const BigInt& leading() const { return c_.back(); }

    BigInt operator()(const BigInt& x) const {
        BigInt acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    int sign_at(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
        return acc.sign();
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<BigInt> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long long>(i);
        return Polynomial(std::move(d));
    }

    BigInt content() const {
        BigInt g = 0;
        for (const auto& v : c_) g = boost::multiprecision::gcd(g, v);
        return g;
    }

    /// Divided by its content, with positive leading coefficient.
    Polynomial primitive() const {
        if (is_zero()) return {};
        BigInt g = content();
        if (leading() < 0) g = -g;
        std::vector<BigInt> out(c_);
        for (auto& v : out) v /= g;
        return Polynomial(std::move(out));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(out));
    }

    Polynomial pow(std::size_t e) const {
        Polynomial out{1};
        for (std::size_t i = 0; i < e; ++i) out = out * *this;
        return out;
    }

    /// Exact quotient and remainder when the divisor's leading coefficient is
    /// +-1; otherwise the result is only valid if the division is exact.
    /// Returns false if a non-integer quotient coefficient would be needed.
    bool divide(const Polynomial& divisor, Polynomial& quotient, Polynomial& remainder) const {
        require(!divisor.is_zero(), ErrorCode::invalid_argument, "polynomial division by zero");
        std::vector<BigInt> rem(c_);
        const long dd = divisor.degree();
        if (degree() < dd) {
            quotient = {};
            remainder = *this;
            return true;
        }
        std::vector<BigInt> q(static_cast<std::size_t>(degree() - dd + 1), 0);
        const BigInt& lead = divisor.leading();
        for (long i = degree(); i >= dd; --i) {
            const BigInt& top = rem[static_cast<std::size_t>(i)];
            if (top == 0) continue;
            if (top % lead != 0) return false;
            const BigInt f = top / lead;
            q[static_cast<std::size_t>(i - dd)] = f;
            for (long j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= f * divisor.c_[static_cast<std::size_t>(j)];
        }
        quotient = Polynomial(std::move(q));
        remainder = Polynomial(std::move(rem));
        return true;
    }

    /// Quotient if divisor divides this polynomial exactly over the integers.
    bool divides_by(const Polynomial& divisor, Polynomial& quotient) const {
        Polynomial r;
        return divide(divisor, quotient, r) && r.is_zero();
    }

    std::string to_string(char var = 'x') const {
        if (is_zero()) return "0";
        std::string out;
        for (long i = degree(); i >= 0; --i) {
            const BigInt& v = c_[static_cast<std::size_t>(i)];
            if (v == 0) continue;
            BigInt mag = v < 0 ? BigInt(-v) : v;
            if (out.empty())
                out += v < 0 ? "-" : "";
            else
                out += v < 0 ? " - " : " + ";
            if (mag != 1 || i == 0) out += mag.str();
            if (i >= 1) out += var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

/// Remainder of a by b over the rationals, scaled to a primitive integer
/// polynomial (sign preserved relative to the true rational remainder).
inline Polynomial rational_remainder(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> rem;
    for (const auto& v : a.coeffs()) rem.emplace_back(v);
    const long db = b.degree();
    const Rational lead(b.leading());
    for (long i = a.degree(); i >= db; --i) {
        const Rational top = rem[static_cast<std::size_t>(i)];
        if (top == 0) continue;
        const Rational f = top / lead;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= f * Rational(b.coeffs()[static_cast<std::size_t>(j)]);
    }
    rem.resize(static_cast<std::size_t>(std::max<long>(db, 0)));
    BigInt den = 1;
    for (const auto& v : rem) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(v));
    std::vector<BigInt> out;
    for (const auto& v : rem) out.push_back(boost::multiprecision::numerator(v * Rational(den)));
    Polynomial p(std::move(out));
    if (p.is_zero()) return p;
    BigInt g = p.content();
    std::vector<BigInt> scaled(p.coeffs());
    for (auto& v : scaled) v /= g;
    return Polynomial(std::move(scaled));
}

/// Primitive gcd with positive leading coefficient.
inline Polynomial gcd(Polynomial a, Polynomial b) {
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    a = a.primitive();
    b = b.primitive();
    while (!b.is_zero()) {
        Polynomial r = rational_remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.primitive();
}

/// Exact quotient of a by a divisor known to divide it (primitive factors).
inline Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
    Polynomial q;
    if (a.divides_by(b, q)) return q;
    // Primitive divisors of a primitive polynomial divide over Z (Gauss);
    // a non-primitive dividend may need its content stripped first.
    Polynomial ap = a.primitive();
    require(ap.divides_by(b, q), ErrorCode::certification, "expected exact polynomial division");
    return q;
}

struct SquareFreeFactor {
    Polynomial factor;
    std::size_t multiplicity = 0;
};

/// Square-free decomposition p = c * prod factor_i^i with primitive,
/// pairwise coprime, square-free factors. Constant factors are dropped.
inline std::vector<SquareFreeFactor> square_free_decomposition(const Polynomial& p) {
    std::vector<SquareFreeFactor> out;
    if (p.degree() <= 0) return out;
    const Polynomial f = p.primitive();
    Polynomial a = gcd(f, f.derivative()); // prod f_i^(i-1)
    Polynomial b = exact_quotient(f, a);   // prod f_i
    for (std::size_t i = 1; b.degree() > 0; ++i) {
        Polynomial g = gcd(a, b);
        Polynomial factor = exact_quotient(b, g);
        if (factor.degree() > 0) out.push_back({factor.primitive(), i});
        a = exact_quotient(a, g);
        b = std::move(g);
    }
    return out;
}

} // namespace chainseidel
