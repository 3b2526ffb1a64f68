#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace revmine {

// Base class for every error this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// File could not be opened or read.
class IoError : public Error {
public:
    using Error::Error;
};

// Input produced zero valid records.
class EmptyCorpusError : public Error {
public:
    using Error::Error;
};

// Bad dictionary, mapping, or run configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

// A value violated a domain precondition (e.g. rating outside 1..5).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Conditional probability requested for a history with zero observed
// continuations. Distinct from probability 0 for a seen history.
class UnseenHistoryError : public Error {
public:
    UnseenHistoryError(const std::string& what, std::size_t position = 0)
        : Error(what), position_(position) {}

    // 0-based index of the word whose conditional was undefined.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Probability queried against a table with no tokens at all.
class UndefinedModelError : public Error {
public:
    using Error::Error;
};

// Internal consistency broken (e.g. sentence referencing an unknown review).
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace revmine
