#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace subrec {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A fundamental sequence was requested for zero or a successor ordinal.
class NotLimit : public Error {
public:
    using Error::Error;
};

/// A base function violates the precondition of the operation
/// (not strictly increasing, or yields a zero coefficient).
class InvalidBase : public Error {
public:
    using Error::Error;
};

class ZeroHasNoPredecessor : public Error {
public:
    ZeroHasNoPredecessor() : Error("zero has no predecessor") {}
};

/// The Ackermann hierarchy starts at index 1.
class IndexZero : public Error {
public:
    IndexZero() : Error("Ackermann index must be at least 1") {}
};

/// A law's hypothesis does not hold on the sampled instance.
class PreconditionUnmet : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    enum class Resource { Steps, Bits };

    explicit BudgetExceeded(Resource r)
        : Error(r == Resource::Steps ? "budget exceeded: steps" : "budget exceeded: bits"), resource_(r) {}

    Resource resource() const { return resource_; }

private:
    Resource resource_;
};

/// Parse failure at a 0-based character offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class SyntaxError : public ParseError {
public:
    explicit SyntaxError(std::size_t position, const std::string& detail = "syntax error")
        : ParseError(detail, position) {}
};

/// Grammatical input that is not the canonical spelling of a term.
class NotCanonical : public ParseError {
public:
    explicit NotCanonical(std::size_t position, const std::string& detail = "not in Cantor normal form")
        : ParseError(detail, position) {}
};

}  // namespace subrec
