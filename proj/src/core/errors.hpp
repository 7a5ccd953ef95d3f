#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace astdiff {

// Raised when source text cannot be lexed or parsed.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::string message, uint32_t line, uint32_t column)
        : std::runtime_error(std::move(message)), line_(line), column_(column) {}

    uint32_t line() const { return line_; }
    uint32_t column() const { return column_; }

private:
    uint32_t line_;
    uint32_t column_;
};

// Raised when an interchange document or mapping document violates its schema.
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(std::string message) : std::runtime_error(std::move(message)) {}
};

}  // namespace astdiff
