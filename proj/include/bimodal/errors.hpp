#pragma once

#include <stdexcept>
#include <string>

namespace bimodal {

// Base for all structured domain errors (CLI maps these to exit code 3).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input text could not be parsed; carries a 0-based position (CLI exit code 2).
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

struct NotSquare : DomainError {
    using DomainError::DomainError;
};
struct DimensionMismatch : DomainError {
    using DomainError::DomainError;
};
struct DenominatorVanishesAtZero : DomainError {
    using DomainError::DomainError;
};
struct PeriodTooLarge : DomainError {
    using DomainError::DomainError;
};
struct NotAdmissible : DomainError {
    using DomainError::DomainError;
};
struct BistableInput : DomainError {
    using DomainError::DomainError;
};
struct NotBistable : DomainError {
    using DomainError::DomainError;
};
struct InsufficientSymbols : DomainError {
    using DomainError::DomainError;
};
struct NonIntegerLapCoefficient : DomainError {
    using DomainError::DomainError;
};
struct NotMarkovForm : DomainError {
    using DomainError::DomainError;
};
struct DuplicateItineraries : DomainError {
    using DomainError::DomainError;
};
struct AtDiscontinuity : DomainError {
    using DomainError::DomainError;
};
struct OrbitEscapedDomain : DomainError {
    using DomainError::DomainError;
};
struct BisectionFailure : DomainError {
    using DomainError::DomainError;
};

} // namespace bimodal
