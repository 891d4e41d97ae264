#pragma once

#include <stdexcept>
#include <string>

namespace isoform {

// Raised for bad user input: unknown labels, out-of-range parameters,
// inadmissible types, malformed catalog files. Maps to CLI exit code 1.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a mathematical invariant that is guaranteed by theory fails
// at runtime: axiom violations, Hsiang inequality failures, divisibility
// failures. These indicate a bug or inconsistent catalog data, never a
// user mistake. Maps to CLI exit code 2.
class invariant_error : public std::runtime_error {
public:
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace isoform
