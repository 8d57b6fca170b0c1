#pragma once

#include <stdexcept>
#include <string>

namespace ramify {

// Error taxonomy shared by the C++ core and the C API status codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidArgumentError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

// Malformed text in a filtration / point / graph / cover file.
struct ParseError : Error {
    using Error::Error;
};

// Face-closure violation: a face is missing or born later than its coface.
struct ClosureError : Error {
    using Error::Error;
};

struct NotACycleError : Error {
    using Error::Error;
};

struct UnknownIdError : Error {
    using Error::Error;
};

// irreducible_cover called on an independent set (or an uncoverable one).
struct IndependentSetError : Error {
    using Error::Error;
};

// A result failed a self-check that should hold by theorem (implementation bug).
struct InternalError : Error {
    using Error::Error;
};

}  // namespace ramify
