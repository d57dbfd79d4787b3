#pragma once

#include <stdexcept>
#include <string>

namespace tapecalc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ill-typed composition, tensor or term construction.
struct TypeError : Error {
    using Error::Error;
};

// Probability or mass constraint violated.
struct MassError : Error {
    using Error::Error;
};

// Operation not available on the given base instance.
struct UnsupportedError : Error {
    using Error::Error;
};

struct ParseError : Error {
    int         line;
    int         col;
    std::string expected;

    ParseError(int line, int col, std::string expected, const std::string& msg)
        : Error(msg), line(line), col(col), expected(std::move(expected)) {}
};

} // namespace tapecalc
