#pragma once

#include <stdexcept>
#include <string>

namespace lieclass {

/// A well-formed request the mathematics rejects (D2 is not simple, a
/// parameter outside the classified envelope, ...).  The CLI maps it to exit 1.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad grammar, unknown verb, missing argument.  Exit 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace lieclass
