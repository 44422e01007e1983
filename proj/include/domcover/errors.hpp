#pragma once

#include <stdexcept>
#include <string>

namespace domcover {

/// An exhaustive search was requested beyond its size guard.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A condition the covering lemmas guarantee failed to hold; indicates a
/// bug or a violated precondition, never a legitimate negative answer.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed input file or certificate.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace domcover
