#pragma once

#include <stdexcept>
#include <string>

namespace vsheet {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Violated call contract (array length mismatch, bad argument).
struct ContractError : Error {
    using Error::Error;
};

/// Invalid geometry: axis intersection, degenerate speed, bad preset.
struct GeometryError : Error {
    using Error::Error;
};

/// Requested operation is not implemented for this fibration.
struct NotImplementedError : Error {
    using Error::Error;
};

/// The RHS became singular during evaluation; carries the offending sample.
struct SingularityError : Error {
    SingularityError(const std::string& what, int sample)
        : Error(what + " at sample " + std::to_string(sample)), sample_index(sample) {}
    int sample_index;
};

/// Period group is not discrete (or trivially degenerate).
struct PeriodError : Error {
    using Error::Error;
};

/// Prequantization condition a*ell in 2*pi*Z violated.
struct PrequantError : Error {
    using Error::Error;
};

/// The two RHS pipelines disagreed beyond tolerance in CrossCheck mode.
struct CrossCheckError : Error {
    using Error::Error;
};

}  // namespace vsheet
