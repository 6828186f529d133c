#pragma once

#include <stdexcept>
#include <string>

namespace conglat {

// Thrown when an input violates an operation's precondition.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation hit its configured work limit (factorization budget,
// period size, search window) before it could finish.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A search that the surrounding mathematics guarantees to succeed did not.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace conglat
