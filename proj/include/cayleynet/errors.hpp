#pragma once

#include <stdexcept>
#include <string>

namespace cayleynet {

/// Malformed input: bad text notation, out-of-range parameters, violated preconditions.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured size guard refused the computation.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The requested computation is not implemented for this input shape.
class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cayleynet
