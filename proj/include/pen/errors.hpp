// errors.hpp — exception types shared by all modules

#pragma once

#include <stdexcept>
#include <string>

namespace pen {

// Requested object exceeds the configured dense/term capacity.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller-side precondition was violated (bad index, dimension mismatch, ...).
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A numerical contract was violated (non-Hermitian input to the eigensolver,
// negative eigenvalue fed to the entropy, ...).
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// A constructive decomposition was requested outside its feasibility region.
// Carries the violated bound so callers can report it.
struct ThresholdError : std::runtime_error {
    double bound;
    ThresholdError(const std::string& what, double bound_) : std::runtime_error(what), bound(bound_) {}
};

// Two certifiers produced contradictory claims. Must never happen; mapped to
// a dedicated process exit code by the CLI.
struct InternalInconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace pen
