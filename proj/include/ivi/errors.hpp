#pragma once

#include <stdexcept>
#include <string>

namespace ivi {

// Failure categories used across the library. Callers that care about the
// reason (tests, the CLI) inspect code(); everyone else just sees what().
enum class errc {
    non_increasing,
    interval_reversed,
    out_of_range,
    length_mismatch,
    empty_pair,
    undefined,
    arity_mismatch,
    not_squarefree,
    zero_ideal,
    not_in_quotient,
    too_many_generators,
    too_large,
    shape_mismatch,
    overflow,
    empty_table,
    parse_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::non_increasing: return "NonIncreasing";
        case errc::interval_reversed: return "IntervalReversed";
        case errc::out_of_range: return "OutOfRange";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::empty_pair: return "EmptyPair";
        case errc::undefined: return "Undefined";
        case errc::arity_mismatch: return "ArityMismatch";
        case errc::not_squarefree: return "NotSquarefree";
        case errc::zero_ideal: return "ZeroIdeal";
        case errc::not_in_quotient: return "NotInQuotient";
        case errc::too_many_generators: return "TooManyGenerators";
        case errc::too_large: return "TooLarge";
        case errc::shape_mismatch: return "ShapeMismatch";
        case errc::overflow: return "Overflow";
        case errc::empty_table: return "EmptyTable";
        case errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw error(code, message);
}

} // namespace ivi
