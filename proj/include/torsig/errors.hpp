#pragma once

#include <stdexcept>
#include <string>

namespace torsig {

/// Bad user input: non-coprime pair, parameter out of range, unparsable rational.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The requested point is a jump of the signature function, where it is undefined.
class JumpPointError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A closed formula disagreed with itself or its oracle (non-integral signature,
/// routes that should agree but do not). Always a bug, never user error.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace torsig
