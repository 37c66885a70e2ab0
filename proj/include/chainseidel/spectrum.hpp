#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "arith.hpp"
#include "block_string.hpp"
#include "char_poly.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace chainseidel {

using Approx = boost::multiprecision::cpp_bin_float_50;

/// (a + sign * sqrt(d)) / c with d > 0 not a perfect square and c > 0.
struct QuadraticSurd {
    BigInt a;
    int sign = 1;
    BigInt d;
    BigInt c = 1;
    friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
};

/// Isolating interval [lo, hi] for the unique root of `certificate` inside it;
/// the certificate is square-free and changes sign between lo and hi.
struct CertifiedInterval {
    Rational lo;
    Rational hi;
    Polynomial certificate;
    friend bool operator==(const CertifiedInterval&, const CertifiedInterval&) = default;
};

using Eigenvalue = std::variant<BigInt, QuadraticSurd, CertifiedInterval>;

inline bool is_integer(const Eigenvalue& v) noexcept { return std::holds_alternative<BigInt>(v); }

inline Approx approximate(const Eigenvalue& v) {
    if (const auto* z = std::get_if<BigInt>(&v)) return Approx(*z);
    if (const auto* s = std::get_if<QuadraticSurd>(&v)) {
        const Approx root = boost::multiprecision::sqrt(Approx(s->d));
        return (Approx(s->a) + (s->sign < 0 ? -root : root)) / Approx(s->c);
    }
    const auto& iv = std::get<CertifiedInterval>(v);
    return Approx((iv.lo + iv.hi) / 2);
}

inline double to_double(const Eigenvalue& v) { return approximate(v).convert_to<double>(); }

/// Exact decimal expansion of a rational whose denominator is a power of two.
inline std::string dyadic_to_decimal(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    require((den & (den - 1)) == 0, ErrorCode::invalid_argument, "not a dyadic rational");
    const auto shift = static_cast<unsigned>(boost::multiprecision::msb(den));
    BigInt mag = num < 0 ? BigInt(-num) : num;
    BigInt scaled = mag * boost::multiprecision::pow(BigInt(5), shift);
    std::string digits = scaled.str();
    if (shift > 0) {
        if (digits.size() <= shift) digits.insert(0, shift - digits.size() + 1, '0');
        digits.insert(digits.size() - shift, ".");
        while (digits.back() == '0') digits.pop_back();
        if (digits.back() == '.') digits.pop_back();
    }
    return (num < 0 ? "-" : "") + digits;
}

/// Serialized form: "int:z", "surd:(a+√d)/c", "interval:[lo,hi]".
inline std::string to_string(const Eigenvalue& v) {
    if (const auto* z = std::get_if<BigInt>(&v)) return "int:" + z->str();
    if (const auto* s = std::get_if<QuadraticSurd>(&v))
        return "surd:(" + s->a.str() + (s->sign < 0 ? "-" : "+") + "√" + s->d.str() + ")/" + s->c.str();
    const auto& iv = std::get<CertifiedInterval>(v);
    return "interval:[" + dyadic_to_decimal(iv.lo) + "," + dyadic_to_decimal(iv.hi) + "]";
}

struct SpectrumEntry {
    Eigenvalue value;
    std::size_t multiplicity = 0;
    friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Multiset of eigenvalues sorted ascending with equal values merged.
class ExactSpectrum {
public:
    ExactSpectrum() = default;

    explicit ExactSpectrum(std::vector<SpectrumEntry> entries) {
        std::vector<std::pair<Approx, SpectrumEntry>> keyed;
        for (auto& e : entries) {
            if (e.multiplicity == 0) continue;
            keyed.emplace_back(approximate(e.value), std::move(e));
        }
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& x, const auto& y) { return x.first < y.first; });
        for (auto& [key, e] : keyed) {
            if (!entries_.empty() && entries_.back().value == e.value)
                entries_.back().multiplicity += e.multiplicity;
            else
                entries_.push_back(std::move(e));
        }
    }

    static ExactSpectrum from_integers(const std::vector<std::pair<long long, std::size_t>>& values) {
        std::vector<SpectrumEntry> out;
        for (auto [v, m] : values) out.push_back({BigInt(v), m});
        return ExactSpectrum(std::move(out));
    }

    const std::vector<SpectrumEntry>& entries() const noexcept { return entries_; }

    /// Sum of multiplicities (matrix order).
    std::size_t order() const noexcept {
        std::size_t n = 0;
        for (const auto& e : entries_) n += e.multiplicity;
        return n;
    }

    std::size_t distinct_count() const noexcept { return entries_.size(); }

    std::size_t multiplicity(long long z) const {
        for (const auto& e : entries_)
            if (const auto* v = std::get_if<BigInt>(&e.value); v && *v == z) return e.multiplicity;
        return 0;
    }

    std::size_t max_multiplicity() const noexcept {
        std::size_t best = 0;
        for (const auto& e : entries_) best = std::max(best, e.multiplicity);
        return best;
    }

    const SpectrumEntry& smallest() const {
        require(!entries_.empty(), ErrorCode::degenerate, "empty spectrum");
        return entries_.front();
    }

    const SpectrumEntry& largest() const {
        require(!entries_.empty(), ErrorCode::degenerate, "empty spectrum");
        return entries_.back();
    }

    /// Exact sum of mult * lambda^power for power 1 or 2, or nullopt if the
    /// irrational parts do not cancel (or an algebraic factor is incomplete).
    std::optional<Rational> power_sum(int power) const {
        require(power == 1 || power == 2, ErrorCode::invalid_argument, "power_sum supports powers 1 and 2");
        Rational rational_part = 0;
        std::map<BigInt, Rational> radical_part; // coefficient of sqrt(d)
        struct FactorUse {
            std::size_t roots = 0;
            std::size_t multiplicity = 0;
            bool uniform = true;
        };
        std::vector<std::pair<Polynomial, FactorUse>> factors;

        for (const auto& e : entries_) {
            const Rational mult(static_cast<long long>(e.multiplicity));
            if (const auto* z = std::get_if<BigInt>(&e.value)) {
                rational_part += mult * (power == 1 ? Rational(*z) : Rational(*z * *z));
            } else if (const auto* s = std::get_if<QuadraticSurd>(&e.value)) {
                const Rational c(s->c);
                if (power == 1) {
                    rational_part += mult * Rational(s->a) / c;
                    radical_part[s->d] += mult * Rational(s->sign) / c;
                } else {
                    rational_part += mult * Rational(s->a * s->a + s->d) / (c * c);
                    radical_part[s->d] += mult * Rational(2 * s->a * s->sign) / (c * c);
                }
            } else {
                const auto& iv = std::get<CertifiedInterval>(e.value);
                auto it = std::find_if(factors.begin(), factors.end(),
                                       [&](const auto& f) { return f.first == iv.certificate; });
                if (it == factors.end()) {
                    factors.push_back({iv.certificate, {0, e.multiplicity, true}});
                    it = std::prev(factors.end());
                }
                it->second.roots += 1;
                if (it->second.multiplicity != e.multiplicity) it->second.uniform = false;
            }
        }
        for (const auto& [f, use] : factors) {
            if (!use.uniform || use.roots != static_cast<std::size_t>(f.degree())) return std::nullopt;
            const Rational lead(f.leading());
            const Rational e1 = -Rational(f.coeff(static_cast<std::size_t>(f.degree() - 1))) / lead;
            const Rational e2 = Rational(f.coeff(static_cast<std::size_t>(f.degree() - 2))) / lead;
            const Rational sum = power == 1 ? e1 : e1 * e1 - 2 * e2;
            rational_part += Rational(static_cast<long long>(use.multiplicity)) * sum;
        }
        for (const auto& [d, coef] : radical_part)
            if (coef != 0) return std::nullopt;
        return rational_part;
    }

    friend bool operator==(const ExactSpectrum&, const ExactSpectrum&) = default;

private:
    std::vector<SpectrumEntry> entries_;
};

inline bool is_integral(const ExactSpectrum& sp) {
    return std::all_of(sp.entries().begin(), sp.entries().end(),
                       [](const SpectrumEntry& e) { return is_integer(e.value); });
}

inline std::string to_string(const ExactSpectrum& sp) {
    std::string out = "{";
    for (std::size_t i = 0; i < sp.entries().size(); ++i) {
        const auto& e = sp.entries()[i];
        if (i) out += ", ";
        out += to_string(e.value) + " x" + std::to_string(e.multiplicity);
    }
    return out + "}";
}

// ---------------------------------------------------------------------------
// Root extraction

inline constexpr unsigned kIntervalWidthBits = 40;

namespace detail {

/// Integer roots of p in [-bound, bound], removed from p with multiplicity.
inline std::vector<SpectrumEntry> strip_integer_roots(Polynomial& p, const BigInt& bound) {
    std::vector<SpectrumEntry> out;
    auto strip = [&](const BigInt& z) {
        std::size_t mult = 0;
        const Polynomial lin = Polynomial::linear_root(z);
        Polynomial q;
        while (p.degree() >= 1 && p(z) == 0 && p.divides_by(lin, q)) {
            p = std::move(q);
            ++mult;
        }
        if (mult) out.push_back({z, mult});
    };
    strip(BigInt(0));
    for (BigInt z = -bound; z <= bound; ++z) {
        if (z == 0 || p.degree() < 1) continue;
        if (p.coeff(0) % z != 0) continue;
        strip(z);
    }
    return out;
}

inline QuadraticSurd make_surd(BigInt a, int sign, BigInt d, BigInt c) {
    if (c < 0) {
        a = -a;
        c = -c;
        sign = -sign;
    }
    // Pull the largest f with f | a, f | c, f^2 | d out of the fraction.
    const BigInt g = boost::multiprecision::gcd(a, c);
    for (BigInt f = g; f > 1; --f) {
        if (g % f == 0 && d % (f * f) == 0) {
            a /= f;
            c /= f;
            d /= f * f;
            break;
        }
    }
    return {a, sign, d, c};
}

/// Both roots of an irreducible real quadratic, ascending.
inline std::vector<Eigenvalue> quadratic_roots(const Polynomial& q) {
    const BigInt& a2 = q.coeff(2);
    const BigInt& a1 = q.coeff(1);
    const BigInt& a0 = q.coeff(0);
    const BigInt disc = a1 * a1 - 4 * a2 * a0;
    require(disc > 0 && !is_perfect_square(disc), ErrorCode::certification,
            "quadratic factor " + q.to_string() + " does not have irrational real roots");
    QuadraticSurd lo = make_surd(-a1, -1, disc, 2 * a2);
    QuadraticSurd hi = make_surd(-a1, +1, disc, 2 * a2);
    return {lo, hi};
}

inline std::vector<Polynomial> sturm_sequence(const Polynomial& f) {
    std::vector<Polynomial> seq{f, f.derivative()};
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        Polynomial r = rational_remainder(seq[seq.size() - 2], seq.back());
        if (r.is_zero()) break;
        seq.push_back(Polynomial{} - r);
    }
    return seq;
}

inline std::size_t sign_variations(const std::vector<Polynomial>& seq, const Rational& x) {
    std::size_t changes = 0;
    int last = 0;
    for (const auto& p : seq) {
        const int s = p.sign_at(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

/// Disjoint isolating intervals (ascending) for the real roots of a
/// square-free integer polynomial with no rational roots, each refined to
/// width at most 2^-kIntervalWidthBits.
inline std::vector<std::pair<Rational, Rational>> isolate_real_roots(const Polynomial& f) {
    const auto seq = sturm_sequence(f);
    BigInt max_coef = 0;
    for (long i = 0; i < f.degree(); ++i) {
        BigInt v = f.coeff(static_cast<std::size_t>(i));
        if (v < 0) v = -v;
        max_coef = std::max(max_coef, v);
    }
    BigInt lead = f.leading() < 0 ? BigInt(-f.leading()) : f.leading();
    const BigInt cauchy = 1 + (max_coef + lead - 1) / lead;
    BigInt bound = 1;
    while (bound < cauchy) bound <<= 1;

    std::vector<std::pair<Rational, Rational>> isolated;
    // Depth-first, left half first, so output is ascending.
    std::vector<std::pair<Rational, Rational>> stack{{Rational(-bound), Rational(bound)}};
    while (!stack.empty()) {
        auto [lo, hi] = stack.back();
        stack.pop_back();
        const std::size_t roots = sign_variations(seq, lo) - sign_variations(seq, hi);
        if (roots == 0) continue;
        if (roots == 1) {
            isolated.emplace_back(lo, hi);
            continue;
        }
        const Rational mid = (lo + hi) / 2;
        require(f.sign_at(mid) != 0, ErrorCode::certification, "unexpected rational root during isolation");
        stack.emplace_back(mid, hi);
        stack.emplace_back(lo, mid);
    }

    const Rational width = Rational(1, BigInt(1) << kIntervalWidthBits);
    for (auto& [lo, hi] : isolated) {
        int s_lo = f.sign_at(lo);
        const int s_hi = f.sign_at(hi);
        require(s_lo != 0 && s_hi != 0 && s_lo != s_hi, ErrorCode::certification,
                "isolating interval lacks a sign change");
        while (hi - lo > width) {
            const Rational mid = (lo + hi) / 2;
            const int s = f.sign_at(mid);
            require(s != 0, ErrorCode::certification, "unexpected rational root during refinement");
            if (s == s_lo)
                lo = mid;
            else
                hi = mid;
        }
    }
    return isolated;
}

inline BigInt round_nearest(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    BigInt twice = 2 * num + den;
    BigInt floor_div = twice / (2 * den);
    if (twice < 0 && floor_div * 2 * den != twice) --floor_div;
    return floor_div;
}

/// Roots of a square-free factor of degree >= 3 with no rational roots.
/// Quadratic subfactors are detected from root pairs and reported as surds;
/// the rest are certified intervals of the remaining factor.
inline std::vector<Eigenvalue> irrational_roots(Polynomial f) {
    auto intervals = isolate_real_roots(f);
    require(static_cast<long>(intervals.size()) == f.degree(), ErrorCode::certification,
            "polynomial " + f.to_string() + " has non-real roots");
    std::vector<Eigenvalue> out;
    bool found = true;
    while (found && f.degree() > 2) {
        found = false;
        for (std::size_t i = 0; i < intervals.size() && !found; ++i) {
            for (std::size_t j = i + 1; j < intervals.size() && !found; ++j) {
                const Rational mi = (intervals[i].first + intervals[i].second) / 2;
                const Rational mj = (intervals[j].first + intervals[j].second) / 2;
                const BigInt sum = round_nearest(mi + mj);
                const BigInt prod = round_nearest(mi * mj);
                const Polynomial q(std::vector<BigInt>{prod, -sum, 1});
                Polynomial rest;
                // q must own exactly the roots isolated in i and j, not some other pair
                const auto straddles = [&q](const std::pair<Rational, Rational>& iv) {
                    return q.sign_at(iv.first) * q.sign_at(iv.second) < 0;
                };
                if (!straddles(intervals[i]) || !straddles(intervals[j])) continue;
                if (!f.divides_by(q, rest)) continue;
                for (auto& r : quadratic_roots(q)) out.push_back(std::move(r));
                f = rest;
                intervals.erase(intervals.begin() + static_cast<long>(j));
                intervals.erase(intervals.begin() + static_cast<long>(i));
                found = true;
            }
        }
    }
    if (f.degree() == 2) {
        for (auto& r : quadratic_roots(f)) out.push_back(std::move(r));
        return out;
    }
    for (auto& [lo, hi] : intervals) {
        const int s_lo = f.sign_at(lo);
        const int s_hi = f.sign_at(hi);
        require(s_lo * s_hi < 0, ErrorCode::certification, "certificate factor lacks a sign change");
        out.push_back(CertifiedInterval{lo, hi, f});
    }
    return out;
}

} // namespace detail

/// Exact real spectrum of a polynomial whose roots are all real and whose
/// integer roots lie in [-integer_root_bound, integer_root_bound].
inline std::vector<SpectrumEntry> polynomial_roots(Polynomial p, const BigInt& integer_root_bound) {
    require(p.degree() >= 0, ErrorCode::invalid_argument, "zero polynomial has no spectrum");
    std::vector<SpectrumEntry> out = detail::strip_integer_roots(p, integer_root_bound);
    for (const auto& [factor, mult] : square_free_decomposition(p)) {
        if (factor.degree() == 1) {
            require(factor.leading() == 1, ErrorCode::certification, "non-integer rational root");
            out.push_back({BigInt(-factor.coeff(0)), mult});
        } else if (factor.degree() == 2) {
            for (auto& r : detail::quadratic_roots(factor)) out.push_back({std::move(r), mult});
        } else {
            for (auto& r : detail::irrational_roots(factor)) out.push_back({std::move(r), mult});
        }
    }
    return out;
}

/// Spectrum of an integer matrix with real eigenvalues (symmetric, or
/// similar to symmetric such as an equitable quotient).
inline ExactSpectrum matrix_spectrum(const IntMatrix& m) {
    return ExactSpectrum(polynomial_roots(char_poly(m), BigInt(m.max_abs_row_sum())));
}

inline ExactSpectrum quotient_spectrum(const BlockString& b) { return matrix_spectrum(quotient_matrix(b).matrix()); }

/// Seidel spectrum of the chain graph: spectrum of the quotient together
/// with -1 repeated n - 2k times.
inline ExactSpectrum exact_spectrum(const BlockString& b) {
    require(2 * b.k() <= kCharPolyCap, ErrorCode::size_cap, "quotient matrix larger than 256");
    const QuotientMatrix q = quotient_matrix(b);
    auto entries = polynomial_roots(char_poly(q), BigInt(q.matrix().max_abs_row_sum()));
    const std::size_t extra = b.n() - 2 * b.k();
    if (extra > 0) entries.push_back({BigInt(-1), extra});
    return ExactSpectrum(std::move(entries));
}

// ---------------------------------------------------------------------------
// Equiangular lines

struct EquiangularParams {
    std::size_t lines = 0;
    std::size_t dimension = 0;
    Eigenvalue min_eigenvalue;

    /// 1/|lambda_min| when lambda_min is an integer.
    std::optional<Rational> cosine() const {
        if (const auto* z = std::get_if<BigInt>(&min_eigenvalue)) return Rational(BigInt(1), -*z);
        return std::nullopt;
    }

    /// "1/5" for integers, "1/|...|" with the exact value otherwise.
    std::string cosine_string() const {
        if (auto c = cosine()) {
            return boost::multiprecision::numerator(*c).str() + "/" + boost::multiprecision::denominator(*c).str();
        }
        return "1/|" + to_string(min_eigenvalue) + "|";
    }
};

inline EquiangularParams equiangular_params(const ExactSpectrum& sp) {
    const auto& low = sp.smallest();
    require(approximate(low.value) < Approx(-1), ErrorCode::degenerate,
            "smallest eigenvalue is not below -1; no nontrivial equiangular system");
    return {sp.order(), sp.order() - low.multiplicity, low.value};
}

} // namespace chainseidel
