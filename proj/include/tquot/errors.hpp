#pragma once

#include <stdexcept>
#include <string>

namespace tquot {

// Malformed matrix text/JSON, unknown labels, bad indices.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An operation refused to run because the input exceeds its subset-size
// guard. Exponential-cost paths fail loudly instead of hanging.
class SizeLimitError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A cross-checked identity failed; indicates a bug, never bad user input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace tquot
