#pragma once

#include <stdexcept>
#include <string>

namespace decisum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonFiniteInput : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class InvalidK : public Error {
public:
    using Error::Error;
};

/// Raised by the brute-force oracle when 2^N is out of reach.
class TooLarge : public Error {
public:
    using Error::Error;
};

class DegenerateFit : public Error {
public:
    using Error::Error;
};

/// Malformed input file or inconsistent command arguments.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace decisum
