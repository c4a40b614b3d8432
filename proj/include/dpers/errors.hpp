#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dpers {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An atom was evaluated against an interpretation that does not define it.
class VocabularyError : public Error {
public:
    using Error::Error;
};

/// A precondition on an argument was violated (negative offset, infinite
/// time point where a finite one is required, value outside [0,1], ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed input text. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(std::string message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          message_(std::move(message)), line_(line), column_(column) {}

    const std::string& message() const noexcept { return message_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

/// Well-formed input that violates a semantic rule (duplicate schema,
/// non-monotone persistence function, missing schema, ...).
class SemanticError : public Error {
public:
    using Error::Error;
};

/// The informative set of a fluent has a component that is not closed.
class ClosedHistoryViolation : public Error {
public:
    ClosedHistoryViolation(std::string fluent, std::string component)
        : Error("informative set of '" + fluent + "' is not closed: component " + component),
          fluent_(std::move(fluent)), component_(std::move(component)) {}

    const std::string& fluent() const noexcept { return fluent_; }
    const std::string& component() const noexcept { return component_; }

private:
    std::string fluent_;
    std::string component_;
};

/// The fluent is never informative, so it has no extrapolation problems.
class EmptyItpError : public Error {
public:
    explicit EmptyItpError(std::string fluent)
        : Error("fluent '" + fluent + "' has no informative time point"), fluent_(std::move(fluent)) {}

    const std::string& fluent() const noexcept { return fluent_; }

private:
    std::string fluent_;
};

}  // namespace dpers
