#pragma once

#include <stdexcept>
#include <string>

namespace halpart {

/// An element or subset does not belong to the ground set it is used with.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive operation was asked to enumerate beyond its cap.
class SizeLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A caller broke an operation's precondition (e.g. passed an invalid partition).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed textual input. The message names the offending line or cell.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace halpart
