#pragma once

#include <stdexcept>
#include <string>

namespace pnhom {

// Base class for everything raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An event or place name/index that does not belong to the net.
struct UnknownIdentifierError : Error {
    using Error::Error;
};

// State-space exploration hit the configured state cap.
struct CapacityError : Error {
    using Error::Error;
};

// Malformed net definition document.
struct ParseError : Error {
    ParseError(const std::string& msg, int line, int column)
        : Error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line),
          column(column) {}
    int line;
    int column;
};

// Structural problem with a semicubical set or chain complex: incompatible
// ambient complexes, face index out of range, nonzero boundary square.
struct ComplexError : Error {
    using Error::Error;
};

} // namespace pnhom
