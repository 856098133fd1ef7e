#pragma once

#include <string>
#include <vector>

namespace stmetric {

struct Violation {
    std::string code;     ///< stable machine-readable tag, e.g. "h_range"
    std::string message;  ///< human-readable detail naming the offending item
};

/// Outcome of a validation pass: every condition that was checked, and every
/// one that failed.
struct ValidationReport {
    std::vector<std::string> checked;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool has(const std::string& code) const;

    void check(const std::string& condition) { checked.push_back(condition); }
    void fail(std::string code, std::string message);
    void merge(const ValidationReport& other);
};

}  // namespace stmetric
