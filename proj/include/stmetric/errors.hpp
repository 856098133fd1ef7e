#pragma once

#include <stdexcept>
#include <string>

namespace stmetric {

enum class ErrorKind {
    DegenerateInput,
    InfiniteHeight,
    Orientation,
    Normalization,
    Incomparable,
    Alignment,
    InvalidMeasure,
    InvalidSequence,
    TooManyMarkers,
};

const char* error_kind_name(ErrorKind kind);

/// Single exception type for library contract violations; `kind()` says which.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace stmetric
