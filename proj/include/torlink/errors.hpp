#pragma once

#include <stdexcept>
#include <string>

namespace torlink {

// Malformed input text or schema violation.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

// Structurally well-formed input that fails a mathematical check.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& m) : std::runtime_error(m) {}
};

// Admissibility constraint rejection (level or charge).
struct ConstraintError : std::runtime_error {
    explicit ConstraintError(const std::string& m) : std::runtime_error(m) {}
};

// Input outside the supported class of manifolds or cycles.
struct UnsupportedError : std::runtime_error {
    explicit UnsupportedError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace torlink
