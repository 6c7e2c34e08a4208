// Error types shared across the library. Each pipeline failure mode gets its
// own type so callers (and the CLI exit-code mapping) can distinguish them.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qhsing {

// Raised by the expression parser; `position` is a 0-based byte offset into
// the input text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// No positive integer weight vector makes f weighted-homogeneous.
class NotQuasiHomogeneous : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The Jacobian ideal is not zero-dimensional: the singular locus of {f=0}
// has positive dimension.
class NonIsolatedSingularity : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The gradient of f does not vanish at the origin.
class SmoothAtOrigin : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An S-polynomial exceeded the configured weighted-degree cap. Hard error,
// never a silent truncation.
class DegreeCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A mathematical identity that must hold for every valid input failed.
// Indicates a bug upstream, not bad user input.
class InternalCheckFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qhsing
