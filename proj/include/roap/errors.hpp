#pragma once

#include <stdexcept>
#include <string>

namespace roap {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input violates the distinct-points requirement (zero distances).
struct DegenerateInstance : Error {
    using Error::Error;
};

// Matrix input is not square/symmetric/zero-diagonal.
struct InvalidMatrix : Error {
    using Error::Error;
};

struct IndexError : Error {
    using Error::Error;
};

struct EmptyRange : Error {
    using Error::Error;
};

// A monotone-restart hint was ahead of the true frontier.
struct ContractViolation : Error {
    using Error::Error;
};

// Brute-force size cap exceeded.
struct CapExceeded : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace roap
