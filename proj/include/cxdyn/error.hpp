#ifndef CXDYN_ERROR_HPP
#define CXDYN_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cxdyn {

/// Base of every error raised by the library. The CLI maps these to exit status 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed expression text. `position()` is the byte offset of the offending character.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& message)
        : Error("syntax error at offset " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class UnknownIdentifier : public Error {
public:
    UnknownIdentifier(std::size_t position, const std::string& name)
        : Error("unknown identifier '" + name + "' at offset " + std::to_string(position)),
          position_(position), name_(name) {}

    std::size_t position() const { return position_; }
    const std::string& name() const { return name_; }

private:
    std::size_t position_;
    std::string name_;
};

/// A function left (0, inf) or was undefined at some evaluation point.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A scale factor alpha^k is not representable as a normal double.
class OverflowError : public Error {
public:
    using Error::Error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// The symmetrised distance is zero at the truncation horizon, so the pair cannot be told apart.
class InputsIndistinguishable : public Error {
public:
    using Error::Error;
};

/// The stable-set scan and the closed-form criterion disagreed away from the delta boundary.
class InconsistentCriteria : public Error {
public:
    using Error::Error;
};

class UnknownPair : public Error {
public:
    using Error::Error;
};

} // namespace cxdyn

#endif
