#pragma once

#include <stdexcept>
#include <string>

namespace ccorr {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A scalar parameter is outside its admissible domain (|a| >= 1, alpha <= 1, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Vector or matrix sizes do not agree, or m > n.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Requested samples or indices fall outside the available data.
class RangeError : public Error {
public:
    using Error::Error;
};

class EmptyInputError : public Error {
public:
    using Error::Error;
};

/// The operation is not defined for this kind of input (e.g. cumulants of a
/// without-replacement scheme, arcsin law for a non-Gaussian model).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// An infinite kernel sum did not converge within the requested truncation.
class TruncationError : public Error {
public:
    using Error::Error;
};

/// Malformed external data. `line` is 1-based, 0 when not applicable.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace ccorr
