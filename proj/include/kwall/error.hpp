#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kwall {

enum class ErrorCode {
    pole,
    degenerate_composite,
    missing_data,
    out_of_range,
    dimension_mismatch,
    bad_codim,
    mismatched_wall_sets,
    unsupported_dimension,
    group_too_large,
    bound_exceeded,
    arity,
    unsupported,
    invalid_argument,
    parse,
    inconsistent,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::pole: return "PoleAt";
        case ErrorCode::degenerate_composite: return "DegenerateComposite";
        case ErrorCode::missing_data: return "MissingData";
        case ErrorCode::out_of_range: return "OutOfRange";
        case ErrorCode::dimension_mismatch: return "DimensionMismatch";
        case ErrorCode::bad_codim: return "BadCodim";
        case ErrorCode::mismatched_wall_sets: return "MismatchedWallSets";
        case ErrorCode::unsupported_dimension: return "UnsupportedDimension";
        case ErrorCode::group_too_large: return "GroupTooLarge";
        case ErrorCode::bound_exceeded: return "BoundExceeded";
        case ErrorCode::arity: return "ArityError";
        case ErrorCode::unsupported: return "Unsupported";
        case ErrorCode::invalid_argument: return "InvalidArgument";
        case ErrorCode::parse: return "ParseError";
        case ErrorCode::inconsistent: return "Inconsistent";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace kwall
