#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <vector>

#include "chain_graph.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace chainseidel {

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        for (const auto& r : rows) {
            require(r.size() == cols_, ErrorCode::invalid_argument, "ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    std::int64_t& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

    std::int64_t trace() const noexcept {
        std::int64_t t = 0;
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
        return t;
    }

    /// Induced infinity norm; bounds the modulus of every eigenvalue.
    std::int64_t max_abs_row_sum() const noexcept {
        std::int64_t best = 0;
        for (std::size_t i = 0; i < rows_; ++i) {
            std::int64_t s = 0;
            for (std::size_t j = 0; j < cols_; ++j) s += std::llabs((*this)(i, j));
            best = std::max(best, s);
        }
        return best;
    }

    bool is_symmetric() const noexcept {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// S = J - I - 2A: -1 on edges, +1 on non-edges, 0 on the diagonal.
class SeidelMatrix {
public:
    explicit SeidelMatrix(const Graph& g) : m_(g.order(), g.order(), 0) {
        for (std::size_t u = 0; u < g.order(); ++u)
            for (std::size_t v = 0; v < g.order(); ++v)
                if (u != v) m_(u, v) = g.adjacent(u, v) ? -1 : 1;
    }

    std::size_t order() const noexcept { return m_.rows(); }
    std::int64_t operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }
    const IntMatrix& matrix() const noexcept { return m_; }

private:
    IntMatrix m_;
};

inline SeidelMatrix seidel_matrix(const Graph& g) {
    require(g.order() >= 1, ErrorCode::invalid_argument, "Seidel matrix needs at least one vertex");
    return SeidelMatrix(g);
}

inline SeidelMatrix seidel_matrix(const ChainGraph& g) { return seidel_matrix(g.graph()); }

/// Quotient of the Seidel matrix over the block partition C_1..C_2k.
class QuotientMatrix {
public:
    explicit QuotientMatrix(const BlockString& b) : cell_sizes_(b.cell_sizes()) {
        const std::size_t cells = cell_sizes_.size();
        m_ = IntMatrix(cells, cells);
        for (std::size_t p = 0; p < cells; ++p) {
            for (std::size_t q = 0; q < cells; ++q) {
                const auto size_q = static_cast<std::int64_t>(cell_sizes_[q]);
                m_(p, q) = p == q ? size_q - 1 : sign(p, q) * size_q;
            }
        }
    }

    /// -1 iff one cell is a 0-block i and the other a 1-block j with i <= j.
    static std::int64_t sign(std::size_t p, std::size_t q) noexcept {
        const bool p_ones = p % 2 == 1;
        const bool q_ones = q % 2 == 1;
        if (p_ones == q_ones) return 1;
        const std::size_t zero_block = (p_ones ? q : p) / 2;
        const std::size_t one_block = (p_ones ? p : q) / 2;
        return zero_block <= one_block ? -1 : 1;
    }

    std::size_t size() const noexcept { return m_.rows(); }
    const std::vector<std::size_t>& cell_sizes() const noexcept { return cell_sizes_; }
    std::int64_t operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }
    const IntMatrix& matrix() const noexcept { return m_; }

private:
    std::vector<std::size_t> cell_sizes_;
    IntMatrix m_;
};

inline QuotientMatrix quotient_matrix(const BlockString& b) { return QuotientMatrix(b); }

} // namespace chainseidel
