#pragma once

#include <stdexcept>
#include <string>

namespace stabreg {

// Malformed inputs: unknown labels, weights not summing to 1, length mismatches.
struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& m) : std::runtime_error(m) {}
};

// Exhaustive mode refused because the instance exceeds the exact-search cap.
struct CapExceededError : std::runtime_error {
    explicit CapExceededError(const std::string& m) : std::runtime_error(m) {}
};

// A caller-supplied object violates a stated contract (e.g. positive-measure
// tuple in a null ledger, combiner value outside [0,1]).
struct ContractError : std::runtime_error {
    explicit ContractError(const std::string& m) : std::runtime_error(m) {}
};

// Empty multiset or otherwise degenerate input to a numeric routine.
struct DegenerateInputError : std::runtime_error {
    explicit DegenerateInputError(const std::string& m) : std::runtime_error(m) {}
};

struct ParameterError : std::runtime_error {
    explicit ParameterError(const std::string& m) : std::runtime_error(m) {}
};

} // namespace stabreg
