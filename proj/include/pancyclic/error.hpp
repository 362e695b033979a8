#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pancyclic {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A size or argument outside the supported range (n > 64, k = 0, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An operation that is only defined on connected graphs received a
/// disconnected one.
class DisconnectedGraph : public Error {
public:
    explicit DisconnectedGraph(const std::string& what)
        : Error("disconnected graph: " + what) {}
};

class NotBipartite : public Error {
public:
    explicit NotBipartite(const std::string& what) : Error("graph is not bipartite: " + what) {}
};

/// The eigensolver exhausted its iteration cap and the inverse-iteration
/// fallback did not reach the residual target either.
class NonConvergence : public Error {
public:
    explicit NonConvergence(const std::string& what) : Error("eigensolver did not converge: " + what) {}
};

/// A cycle search exhausted its node-expansion budget without deciding.
class SearchBudgetExceeded : public Error {
public:
    explicit SearchBudgetExceeded(const std::string& what) : Error("cycle search budget exceeded: " + what) {}
};

/// Malformed graph input. `offset` is the zero-based byte offset of the
/// offending character within the parsed line.
class ParseError : public Error {
public:
    ParseError(const std::string& detail, std::size_t offset)
        : Error("parse error at byte " + std::to_string(offset) + ": " + detail), detail_(detail), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string detail_;
    std::size_t offset_;
};

}  // namespace pancyclic
