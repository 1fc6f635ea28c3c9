#pragma once

#include <stdexcept>

namespace augcolor {

// Malformed arguments: out-of-range vertices, self-loops, bad probabilities,
// unparsable files.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A brute-force or exact routine was asked to run above its size cap.
class SizeError : public std::length_error {
public:
    using std::length_error::length_error;
};

// A formula is degenerate for the given (n, p), e.g. np <= 1.
class RegimeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A closed-form bound has a nonpositive denominator or similar.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// No optimal host coloring can be produced and none was supplied.
class ColoringUnavailable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace augcolor
