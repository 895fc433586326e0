#pragma once

#include <stdexcept>

namespace lfds {

/// Thrown when a state-space enumeration would exceed its cap.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown for unsatisfiable experiment configurations.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a system file cannot be parsed.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace lfds
