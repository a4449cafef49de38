#pragma once

#include <stdexcept>
#include <string>

namespace pg {

// Error taxonomy shared by the whole library.  The CLI maps these to exit
// codes: ParseError -> 2, HypothesisError -> 3, CapacityError -> 4.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad value for an operation (x = identity where forbidden, invalid context
// fields, arithmetic overflow, out-of-range input).
struct DomainError : Error {
    using Error::Error;
};

// Malformed algebraic input: a table that is not a group.
struct StructureError : Error {
    using Error::Error;
};

// A method or construction was asked to run outside its hypotheses.
struct HypothesisError : Error {
    using Error::Error;
};

// Input exceeds a configured resource cap.
struct CapacityError : Error {
    using Error::Error;
};

// Group-expression syntax error; position is a character offset into the text.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace pg
