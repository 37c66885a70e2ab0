#pragma once

#include <cctype>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace chainseidel {

/// One alternating pair 0^zeros 1^ones.
struct Block {
    std::size_t zeros = 0;
    std::size_t ones = 0;
    friend bool operator==(const Block&, const Block&) = default;
};

/// Run-length form 0^{s1} 1^{t1} ... 0^{sk} 1^{tk} of a chain graph.
class BlockString {
public:
    BlockString() = default;

    explicit BlockString(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
        require(!blocks_.empty(), ErrorCode::invalid_argument, "block string needs at least one block");
        for (const auto& b : blocks_)
            require(b.zeros >= 1 && b.ones >= 1, ErrorCode::invalid_argument,
                    "every block needs at least one 0 and one 1");
    }

    BlockString(std::initializer_list<std::pair<std::size_t, std::size_t>> pairs)
        : BlockString(to_blocks(pairs)) {}

    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    std::size_t k() const noexcept { return blocks_.size(); }

    std::size_t n() const noexcept {
        std::size_t total = 0;
        for (const auto& b : blocks_) total += b.zeros + b.ones;
        return total;
    }

    /// Cell sizes in partition order (s1, t1, s2, t2, ...).
    std::vector<std::size_t> cell_sizes() const {
        std::vector<std::size_t> out;
        out.reserve(2 * k());
        for (const auto& b : blocks_) {
            out.push_back(b.zeros);
            out.push_back(b.ones);
        }
        return out;
    }

    /// Canonical caret form, e.g. "0 1^5 0^5 1^4".
    std::string render() const {
        std::string out;
        auto atom = [&out](char bit, std::size_t count) {
            if (!out.empty()) out.push_back(' ');
            out.push_back(bit);
            if (count != 1) {
                out.push_back('^');
                out += std::to_string(count);
            }
        };
        for (const auto& b : blocks_) {
            atom('0', b.zeros);
            atom('1', b.ones);
        }
        return out;
    }

    std::string render_literal() const {
        std::string out;
        out.reserve(n());
        for (const auto& b : blocks_) {
            out.append(b.zeros, '0');
            out.append(b.ones, '1');
        }
        return out;
    }

    friend bool operator==(const BlockString&, const BlockString&) = default;

private:
    static std::vector<Block> to_blocks(std::initializer_list<std::pair<std::size_t, std::size_t>> pairs) {
        std::vector<Block> out;
        for (auto [s, t] : pairs) out.push_back({s, t});
        return out;
    }

    std::vector<Block> blocks_;
};

/// Accepts caret atoms (`0^a`, `1^b`, exponent optional) and raw
/// literal strings, freely mixed and separated by whitespace. Adjacent runs
/// of the same bit are merged.
inline BlockString parse_block_string(std::string_view text) {
    std::vector<std::pair<char, std::size_t>> runs;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw Error(ErrorCode::parse, "cannot parse block string \"" + std::string(text) + "\": " + why);
    };
    auto read_number = [&]() -> std::size_t {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            fail("exponent must be a positive integer");
        std::size_t value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            const std::size_t digit = static_cast<std::size_t>(text[i] - '0');
            if (value > (std::numeric_limits<std::size_t>::max() - digit) / 10) fail("exponent overflow");
            value = value * 10 + digit;
            ++i;
        }
        if (value == 0) fail("zero exponent");
        return value;
    };

    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c != '0' && c != '1') fail(std::string("unexpected character '") + c + "'");
        ++i;
        std::size_t count = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            count = read_number();
        }
        if (!runs.empty() && runs.back().first == c)
            runs.back().second += count;
        else
            runs.emplace_back(c, count);
    }

    if (runs.empty()) fail("empty input");
    if (runs.front().first != '0') fail("must start with 0");
    if (runs.back().first != '1') fail("must end with 1");

    std::vector<Block> blocks;
    for (std::size_t r = 0; r + 1 < runs.size(); r += 2) blocks.push_back({runs[r].second, runs[r + 1].second});
    return BlockString(std::move(blocks));
}

} // namespace chainseidel
