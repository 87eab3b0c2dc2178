#pragma once

#include <stdexcept>
#include <string>

namespace gcseq {

/// Invalid caller-supplied value (bad prime, out-of-range residue, ...).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation's stated precondition does not hold for otherwise valid inputs.
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Two independent computations of the same quantity disagree. Always a bug.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace gcseq
