#pragma once

#include <stdexcept>
#include <string>

namespace cpl {

// Error taxonomy shared by the core; the C layer maps these to status codes.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when an exhaustive enumeration is asked to exceed its stated bound.
struct BoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotFoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cpl
