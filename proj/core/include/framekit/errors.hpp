#pragma once

#include <stdexcept>

namespace framekit {

/// Invalid user-supplied configuration: bad intervals, parameters, task names.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two grid-bound objects refer to different grids. Never resampled silently.
class GridMismatchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numerical hypothesis required by an operation does not hold on this instance.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Requested evaluation mode is unavailable (e.g. no closed form attached).
class UnsupportedModeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace framekit
