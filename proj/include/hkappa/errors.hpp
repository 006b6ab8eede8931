#pragma once

#include <stdexcept>
#include <string>

namespace hkappa {

/// Bad parameter or malformed input (the CLI maps this to exit status 2).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An iterative method failed to reach its tolerance within its iteration cap.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A point lies outside (or on the boundary of) the domain it is evaluated in.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace hkappa
