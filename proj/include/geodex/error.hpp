#pragma once

#include <stdexcept>
#include <string>

namespace geodex {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ParseFault { Syntax, SelfLoop, OutOfRange, DuplicateArc };

// Digraph text format violation; carries the 1-based offending line.
class ParseError : public Error {
public:
    ParseError(ParseFault fault, int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), fault_(fault), line_(line) {}

    ParseFault fault() const { return fault_; }
    int line() const { return line_; }

private:
    ParseFault fault_;
    int line_;
};

// A walk-count row has zero or more than one unreached vertex.
struct NotExcessOneError : Error {
    using Error::Error;
};

// A map that was required to be an automorphism is not one.
struct NotAutomorphismError : Error {
    using Error::Error;
};

// Checkpoint file is missing, corrupt, or belongs to different parameters.
struct CheckpointError : Error {
    using Error::Error;
};

}  // namespace geodex
