#pragma once

#include <stdexcept>
#include <string>

namespace fibaut {

/// A caller broke an operation's precondition (arity mismatch, bad track...).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Script text that does not match the grammar.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column)
    {
    }

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// A well-formed formula that cannot be compiled (unbound variable, unknown
/// automaton, arity mismatch, division by zero).
class CompileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A constructed or guessed automaton failed its post-build check.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fibaut
