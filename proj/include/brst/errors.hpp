#pragma once

#include <stdexcept>
#include <string>

namespace brst {

// Base for every failure the engine reports. Each subclass corresponds to one
// broken precondition so callers can react (or report) precisely.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ContextError : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class TruncationError : public Error {
public:
    using Error::Error;
};

class DivisibilityError : public Error {
public:
    using Error::Error;
};

class DegreeOverflow : public Error {
public:
    using Error::Error;
};

class AcyclicityViolation : public Error {
public:
    using Error::Error;
};

class FiltrationError : public Error {
public:
    using Error::Error;
};

class LemmaHypothesisError : public Error {
public:
    using Error::Error;
};

class InvarianceError : public Error {
public:
    using Error::Error;
};

class ClosednessError : public Error {
public:
    using Error::Error;
};

class ConventionError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace brst
