#pragma once

#include <stdexcept>
#include <string>

namespace pqm {

// Error categories surfaced by the CLI as machine-readable exit diagnostics.
// Precondition violations use std::invalid_argument / std::domain_error and
// map to the "validation" / "domain" categories at the boundary.
enum class ErrorCategory {
    validation,
    domain,
    integrator_failure,
    cutoff_overflow,
    oracle_scale_exceeded,
    no_crossing,
    io,
};

const char* to_string(ErrorCategory cat);

class SimError : public std::runtime_error {
public:
    SimError(ErrorCategory cat, const std::string& msg)
        : std::runtime_error(msg), category(cat) {}

    ErrorCategory category;
};

}  // namespace pqm
