// errors.hpp - Exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace hypercover {

// Malformed input: bad file syntax, out-of-range flags, invalid arguments.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Instance exceeds the documented desk-scale guardrails.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// A structural fact that is a theorem failed to hold. Always a bug.
struct TheoremViolation : std::logic_error {
    explicit TheoremViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hypercover
