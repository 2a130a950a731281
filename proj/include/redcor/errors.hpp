#pragma once

#include <stdexcept>
#include <string>

namespace redcor {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MixedRings : public Error {
public:
    MixedRings() : Error("operands live over different rings") {}
};

class NotStabilized : public Error {
public:
    using Error::Error;
};

class NotFiniteModule : public Error {
public:
    using Error::Error;
};

class PreconditionFailed : public Error {
public:
    using Error::Error;
};

class TruncationExceeded : public Error {
public:
    using Error::Error;
};

class HypothesisUnmet : public Error {
public:
    using Error::Error;
};

class GenerationExhausted : public Error {
public:
    using Error::Error;
};

class UnknownSuite : public Error {
public:
    explicit UnknownSuite(const std::string& id) : Error("unknown suite: " + id) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

class InvalidMorphism : public Error {
public:
    using Error::Error;
};

// A complex or chain map failing its defining identity at a given degree.
class InvalidComplex : public Error {
public:
    InvalidComplex(const std::string& what, int degree)
        : Error(what + " (degree " + std::to_string(degree) + ")"), degree_(degree) {}
    int degree() const { return degree_; }

private:
    int degree_;
};

}  // namespace redcor
