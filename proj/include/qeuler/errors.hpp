#pragma once

#include <stdexcept>
#include <string>

namespace qeuler {

/// Division by the zero element of a field or ring.
class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A rational function evaluated at a root of its denominator.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Inversion of a non-unit in a residue ring.
class NonUnitError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Parameters outside the documented domain (even or composite p, k > n, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed text in the canonical serialization.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace qeuler
