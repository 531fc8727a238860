#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace segloss {

// Bad arguments or malformed tensors (shape mismatch, out-of-range params).
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A numeric evaluation produced a non-finite value. `index` is the flat
// offset of the offending entry, or -1 when not tied to one.
struct NumericalFailure : std::runtime_error {
    explicit NumericalFailure(const std::string& what, std::ptrdiff_t index = -1)
        : std::runtime_error(what), index(index) {}
    std::ptrdiff_t index;
};

struct GenerationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SubsampleFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TrainingDiverged : std::runtime_error {
    TrainingDiverged(const std::string& what, std::size_t epoch)
        : std::runtime_error(what), epoch(epoch) {}
    std::size_t epoch;
};

struct IOError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace segloss
