#pragma once

#include <stdexcept>
#include <string>

namespace sdi {

// Base for everything thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Dimension mismatches, malformed matrices, bad variant parameters.
class ModelError : public Error {
public:
    explicit ModelError(const std::string& msg) : Error(msg) {}
};

// Barrier evaluated below zero on a state from the declared domain.
// Carries the offending value; the witness state is in the message.
class NonnegativityError : public Error {
public:
    NonnegativityError(const std::string& msg, double value)
        : Error(msg), value_(value) {}
    double value() const { return value_; }

private:
    double value_;
};

// Requested horizon exceeds what the exact tree can enumerate.
class HorizonError : public Error {
public:
    explicit HorizonError(const std::string& msg) : Error(msg) {}
};

// No closed form / no evaluator for the requested (map, barrier) pairing,
// unsupported region shape, unsupported moment lifting.
class UnsupportedError : public Error {
public:
    explicit UnsupportedError(const std::string& msg) : Error(msg) {}
};

// An operation's stated precondition does not hold (e.g. x outside K_Delta).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// Configuration file problems; carries line/key diagnostics in the message.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
    ConfigError(const std::string& msg, int line)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

} // namespace sdi
