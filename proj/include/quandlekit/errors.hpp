#pragma once

#include <stdexcept>
#include <string>

namespace quandlekit {

// Unreadable or syntactically invalid input: missing files, bad headers,
// lines that do not parse. CLI maps this to exit code 2.
class MalformedInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structurally well-formed data that fails a mathematical requirement:
// a table that is not a quandle, a cochain that is not a cocycle where one
// is required, a map that is not a homomorphism. CLI maps this to exit 1.
class ValidationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace quandlekit
