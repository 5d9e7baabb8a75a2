#pragma once

#include <stdexcept>
#include <string>

namespace collatzdb {

// A precondition of the called operation does not hold.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The request would exceed the configured size guardrail.
class ResourceLimitExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

// A mathematical invariant that should hold for every admissible input
// was observed to fail. Seeing one of these means a bug or an
// inadmissible map slipped past validation.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace collatzdb
