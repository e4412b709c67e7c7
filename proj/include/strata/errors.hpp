#pragma once

#include <stdexcept>

namespace strata {

// Bad type string or bad user input.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Request exceeds a configured capability (e.g. subsystem enumeration rank limit).
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPolystableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "Cannot happen" conditions (e.g. a subsystem whose Cartan matrix matches no type).
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace strata
