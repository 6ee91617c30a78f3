#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace specgraph {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad argument: dimension mismatch, out-of-range index, invalid size.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Malformed graph text. `line()` is 1-based; 0 means the file as a whole.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A normalized quantity needs positive degrees but node `node()` has none.
class IsolatedVertexError : public Error {
public:
    explicit IsolatedVertexError(std::size_t node)
        : Error("node " + std::to_string(node) + " is isolated (degree 0)"), node_(node) {}

    std::size_t node() const noexcept { return node_; }

private:
    std::size_t node_;
};

/// Structural precondition violated (disconnected graph, cluster count out of range, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Exhaustive search requested outside the supported size range.
class SizeGuardError : public Error {
public:
    using Error::Error;
};

/// Iterative solver hit its iteration cap.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double residual)
        : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

}  // namespace specgraph
