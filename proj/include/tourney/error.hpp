#pragma once

#include <stdexcept>
#include <string>

namespace tourney {

/// Raised for malformed user input: bad files, out-of-range indices, violated preconditions.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a caller-supplied cancellation flag is observed mid-search.
class Cancelled : public std::runtime_error {
public:
    Cancelled() : std::runtime_error("computation cancelled") {}
};

} // namespace tourney
