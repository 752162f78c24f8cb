#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cstar {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class NotHermitian : public Error {
public:
    using Error::Error;
};

class NotPsd : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

class Singular : public Error {
public:
    using Error::Error;
};

class InvalidMeasure : public Error {
public:
    using Error::Error;
};

class MeasureMismatch : public Error {
public:
    using Error::Error;
};

class NotScalar : public Error {
public:
    using Error::Error;
};

// Malformed instance or config input. `where` is a JSON pointer or a line:column anchor.
class InputError : public Error {
public:
    InputError(std::string where, const std::string& what)
        : Error(where + ": " + what), where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

}  // namespace cstar
