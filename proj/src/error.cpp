#include "swarmsim/error.hpp"

namespace swarmsim {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidDimensions: return "invalid-dimensions";
        case ErrorKind::InfeasiblePlacement: return "infeasible-placement";
        case ErrorKind::EmptyOptions: return "empty-options";
        case ErrorKind::EmptyRequests: return "empty-requests";
        case ErrorKind::WeightConstraint: return "weight-constraint";
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Validation: return "validation";
        case ErrorKind::Terminated: return "terminated";
        case ErrorKind::Io: return "io";
    }
    return "unknown";
}

}  // namespace swarmsim
