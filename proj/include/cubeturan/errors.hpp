#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubeturan {

/// A precondition on an argument does not hold.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A request would exceed a hard size cap (ground set, vertex count, guest size).
class ResourceLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Raised by bipartition() and by operations that need a bipartite guest.
class NotBipartiteError : public DomainError {
public:
    NotBipartiteError(const std::string& what, std::vector<int> odd_cycle)
        : DomainError(what), odd_cycle_(std::move(odd_cycle)) {}

    /// Vertices of an odd cycle, in cycle order.
    const std::vector<int>& odd_cycle() const { return odd_cycle_; }

private:
    std::vector<int> odd_cycle_;
};

/// Malformed text input. Line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                             message),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace cubeturan
