#pragma once

#include <stdexcept>
#include <string>

namespace confal {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class IndexOutOfRank : public Error {
public:
    using Error::Error;
};

class RankMismatch : public Error {
public:
    using Error::Error;
};

class NotUnimodular : public Error {
public:
    using Error::Error;
};

class NotAnIdeal : public Error {
public:
    using Error::Error;
};

/// Quotient by a diagonal ideal with a generator of positive degree would
/// have torsion; only full-line quotients are supported.
class NonFreeQuotient : public Error {
public:
    using Error::Error;
};

class WindowTooSmall : public Error {
public:
    using Error::Error;
};

/// A recursion certificate exists but its characteristic polynomial does not
/// split over the rationals, so the f_{a,m} decomposition is unsupported.
class IrrationalRoots : public Error {
public:
    using Error::Error;
};

/// Construction-time rejection: non-rational scalar, torsion presentation,
/// malformed structure data, bad operation arguments.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// DSL / polynomial-text syntax error with source position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what + " at line " + std::to_string(line) + ", column " +
                std::to_string(column)),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

class UnknownBasisSymbol : public ParseError {
public:
    using ParseError::ParseError;
};

class DuplicateName : public ParseError {
public:
    using ParseError::ParseError;
};

}  // namespace confal
