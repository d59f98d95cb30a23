#pragma once

#include <stdexcept>
#include <string>

namespace tcmn {

// Tensor shapes or layer wiring do not line up.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Caller broke an API contract (bad argument, missing cache, empty input).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed input data (dataset rows, truth files).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad config file or flag value.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem failures and malformed checkpoint files.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace tcmn
