#pragma once

#include <stdexcept>
#include <string>

namespace semwave {

// Error codes shared between the C++ core and the C API layer.
enum class ErrorCode : int {
    ok = 0,
    invalid_parameter = 1,
    incompatible_grids = 2,
    degenerate_state = 3,
    wrong_method = 4,
    unsupported_combination = 5,
    convergence_failure = 6,
    unknown_quantity = 7,
    degenerate_vector = 8,
    degenerate_embedding = 9,
    parse_error = 10,
    io_error = 11,
    internal = 12,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void throw_error(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::ok: return "ok";
        case ErrorCode::invalid_parameter: return "invalid_parameter";
        case ErrorCode::incompatible_grids: return "incompatible_grids";
        case ErrorCode::degenerate_state: return "degenerate_state";
        case ErrorCode::wrong_method: return "wrong_method";
        case ErrorCode::unsupported_combination: return "unsupported_combination";
        case ErrorCode::convergence_failure: return "convergence_failure";
        case ErrorCode::unknown_quantity: return "unknown_quantity";
        case ErrorCode::degenerate_vector: return "degenerate_vector";
        case ErrorCode::degenerate_embedding: return "degenerate_embedding";
        case ErrorCode::parse_error: return "parse_error";
        case ErrorCode::io_error: return "io_error";
        case ErrorCode::internal: return "internal";
    }
    return "unknown";
}

} // namespace semwave
