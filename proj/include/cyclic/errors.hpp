#pragma once

#include <stdexcept>
#include <string>

namespace cyclic {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAPermutation : Error {
    using Error::Error;
};

struct NotAnNCycle : Error {
    using Error::Error;
};

struct FirstElementNotOne : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

/// Input below the smallest size an operation is defined for.
struct TooSmall : Error {
    using Error::Error;
};

/// Work size exceeds the configured enumeration cap.
struct CapExceeded : Error {
    using Error::Error;
};

struct NotADivisor : Error {
    using Error::Error;
};

struct DegreeTooHigh : Error {
    using Error::Error;
};

struct NotAdmissible : Error {
    using Error::Error;
};

/// A joint count table failed the exact-divisibility check for type counts.
struct NonIntegerTypeCount : Error {
    using Error::Error;
};

} // namespace cyclic
