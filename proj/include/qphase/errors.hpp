#pragma once

#include <stdexcept>
#include <string>

namespace qphase {

// Bad user input: out-of-range indices, size mismatches, malformed values.
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Gate matrix failed the unitarity check or has malformed wiring.
struct InvalidGate : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A numerical contract was violated at run time (norm drift, degenerate
// projection). The CLI maps this family to exit code 3.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Projective measurement hit a branch with numerically zero norm.
struct DegenerateMeasurement : NumericalError {
    using NumericalError::NumericalError;
};

// Syndrome decoding received bits outside the code's correction table.
struct UncorrectableSyndrome : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Experiment configuration error; carries the offending field path.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const { return field_; }

private:
    std::string field_;
};

} // namespace qphase
