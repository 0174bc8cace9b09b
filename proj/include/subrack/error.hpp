#pragma once

#include <stdexcept>
#include <string>

namespace subrack {

/// Malformed or unsupported input: bad tables, unknown catalog names, bad files.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A size cap was hit; the caller may retry in implicit mode.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition of an operation does not hold for the given arguments.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// An internal cross-check failed, which points to a bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace subrack
