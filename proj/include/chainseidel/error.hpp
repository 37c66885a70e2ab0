#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chainseidel {

enum class ErrorCode {
    parse,            // malformed block string or CLI operand
    invalid_argument, // argument outside an operation's domain
    size_cap,         // input larger than the operation's enumeration cap
    degenerate,       // well-formed input with no meaningful answer
    numeric,          // floating-point oracle failed to converge
    certification,    // exact root isolation could not be certified
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::parse: return "parse_error";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::size_cap: return "size_cap_exceeded";
    case ErrorCode::degenerate: return "degenerate";
    case ErrorCode::numeric: return "numeric_failure";
    case ErrorCode::certification: return "certification_failure";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline void require(bool condition, ErrorCode code, const std::string& message) {
    if (!condition) throw Error(code, message);
}

} // namespace chainseidel
