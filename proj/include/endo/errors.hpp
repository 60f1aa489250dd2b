#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace endo {

/// An enumeration would exceed its configured size bound.
class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed endofunction text, with a 1-based source position.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : std::invalid_argument(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace endo
