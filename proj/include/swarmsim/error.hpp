#pragma once

#include <stdexcept>
#include <string>

namespace swarmsim {

enum class ErrorKind {
    InvalidDimensions,
    InfeasiblePlacement,
    EmptyOptions,
    EmptyRequests,
    WeightConstraint,
    Parse,
    Validation,
    Terminated,
    Io,
};

const char* to_string(ErrorKind kind) noexcept;

/// Recoverable failures surfaced to callers. Contract violations inside the
/// simulation use std::logic_error instead.
class SimError : public std::runtime_error {
public:
    SimError(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace swarmsim
