#pragma once

#include <stdexcept>

namespace sdiqrng {

// Bad user-supplied configuration: unknown key, unparsable value, inconsistent fields.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input data: record files, CSV logs, seed files.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The requested behavior lies outside the feasible set for the given energy bound.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A block in which one input value was never sampled. Such blocks fail closed.
struct DegenerateBlockError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sdiqrng
