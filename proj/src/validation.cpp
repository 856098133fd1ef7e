#include "stmetric/validation.hpp"

#include <algorithm>

#include "stmetric/errors.hpp"

namespace stmetric {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DegenerateInput: return "degenerate input";
        case ErrorKind::InfiniteHeight: return "infinite height";
        case ErrorKind::Orientation: return "orientation";
        case ErrorKind::Normalization: return "normalization";
        case ErrorKind::Incomparable: return "incomparable";
        case ErrorKind::Alignment: return "alignment";
        case ErrorKind::InvalidMeasure: return "invalid measure";
        case ErrorKind::InvalidSequence: return "invalid sequence";
        case ErrorKind::TooManyMarkers: return "too many markers";
    }
    return "error";
}

bool ValidationReport::has(const std::string& code) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.code == code; });
}

void ValidationReport::fail(std::string code, std::string message) {
    violations.push_back({std::move(code), std::move(message)});
}

void ValidationReport::merge(const ValidationReport& other) {
    for (const auto& c : other.checked) {
        if (std::find(checked.begin(), checked.end(), c) == checked.end()) checked.push_back(c);
    }
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

}  // namespace stmetric
