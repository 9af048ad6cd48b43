#pragma once

#include <stdexcept>
#include <string>

namespace plelin {

// Incompatible shapes passed to a matrix/decomposition operation.
class dimension_error : public std::invalid_argument {
public:
    explicit dimension_error(const std::string& what) : std::invalid_argument(what) {}
};

// The partially-defined hook product was requested outside its domain.
class hook_product_error : public std::invalid_argument {
public:
    explicit hook_product_error(const std::string& what) : std::invalid_argument(what) {}
};

// A structural invariant that the library maintains internally was found
// broken; always indicates a bug, never bad user input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Malformed matrix file; carries the 1-based position of the offending token.
class format_error : public std::runtime_error {
public:
    format_error(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace plelin
