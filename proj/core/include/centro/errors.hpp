#pragma once

#include <stdexcept>
#include <string>

namespace centro {

// Division by zero, inverting a singular matrix, invalid modulus, ...
class arithmetic_error : public std::runtime_error {
public:
    explicit arithmetic_error(const std::string& what) : std::runtime_error(what) {}
};

// Non-conformable dimensions, out-of-range blocks, non-square input, ...
class dimension_error : public std::invalid_argument {
public:
    explicit dimension_error(const std::string& what) : std::invalid_argument(what) {}
};

// A theorem's hypothesis does not hold for the given input (wrong commutation
// class, -1 a square in the base field, asymmetric region, ...).
class contract_error : public std::invalid_argument {
public:
    explicit contract_error(const std::string& what) : std::invalid_argument(what) {}
};

// A size guard on a deliberately exponential or naive code path was exceeded.
class guard_error : public std::invalid_argument {
public:
    explicit guard_error(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed text input; carries a 1-based line (0 = unknown) and column.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        if (line == 0) return what;
        std::string s = "line " + std::to_string(line);
        if (column != 0) s += ", column " + std::to_string(column);
        return s + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
};

} // namespace centro
