#pragma once

#include <stdexcept>
#include <string>

namespace kites {

// Malformed input: bad table shapes, out-of-range indices, unparseable files.
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally valid object, invalid request: wrong level, non-normal filter,
// unsupported frame kind for an operation, violated precondition.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Working-depth overflow, size caps, evaluation budgets.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parse failure with position information.
struct ParseError : StructuralError {
    ParseError(int line, int col, const std::string& msg)
        : StructuralError("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
          line(line),
          col(col) {}
    int line;
    int col;
};

}  // namespace kites
