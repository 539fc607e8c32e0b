#pragma once

#include <stdexcept>
#include <string>

#include "fusionbench/report.hpp"

namespace fusionbench {

// Malformed input: bad JSON shape, index out of range, duplicate labels.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exhaustive check would exceed the desk-scale caps.
class CapExceeded : public InputError {
public:
    using InputError::InputError;
};

// A missing or ill-shaped associator block.
class StructuralError : public InputError {
public:
    using InputError::InputError;
};

// Power iteration did not converge, or an integer product overflowed.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A consistency check that can only fail on invalid input rings.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// An operation whose precondition is a passing validation got a failing one.
class ValidationError : public std::runtime_error {
public:
    ValidationError(const std::string& what, Report report)
        : std::runtime_error(what + ": " + report.first_failure()), report_(std::move(report)) {}

    const Report& report() const { return report_; }

private:
    Report report_;
};

}  // namespace fusionbench
