#pragma once

#include <stdexcept>
#include <string>

namespace plethy {

// Base class for all computation errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when two algebraic routes that must agree produce different
// results (an implementation or transcription bug, never user input).
struct InternalCheckError : Error {
    std::string difference;

    InternalCheckError(const std::string& what, std::string diff)
        : Error(what), difference(std::move(diff)) {}
};

} // namespace plethy
