#pragma once

#include <stdexcept>
#include <string>

namespace extor {

// Base class for everything the library throws.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input: grammar violations, unknown variables, bad coefficients.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Structural misuse: ring mismatch, rank mismatch, out-of-range argument.
struct ArgumentError : Error {
    explicit ArgumentError(const std::string& msg) : Error(msg) {}
};

// A hypothesis certificate failed: non-regular sequence, inconsistent instance,
// non-homogeneous input to a graded verdict.
struct CertificationError : Error {
    explicit CertificationError(const std::string& msg) : Error(msg) {}
};

// An internal consistency check failed (d∘d != 0, im ⊄ ker, ...).  Engine bug.
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace extor
