#pragma once

#include <stdexcept>
#include <string>

namespace cirag {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// A model response that could not be decoded. Carries the raw text so the
/// caller's retry policy can log or replay it.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::string raw)
        : Error(msg), raw_(std::move(raw)) {}

    const std::string& raw() const { return raw_; }

private:
    std::string raw_;
};

/// Transport-level backend failure (after the backend's own retry budget).
class BackendError : public Error {
public:
    using Error::Error;
};

/// A replay script had no rule for a request it was asked to serve.
class ScriptError : public Error {
public:
    using Error::Error;
};

} // namespace cirag
