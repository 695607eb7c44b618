#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace animl {

/// A non-fatal finding produced while reading an input (unknown element,
/// duplicate id, unresolved reference, ...). Fatal problems throw ParseError.
struct Diagnostic {
    enum class Severity { Warning, Error };

    Severity severity = Severity::Warning;
    std::string message;
    std::uint64_t line = 0;    // 1-based; 0 when not tied to a source position
    std::uint64_t column = 0;

    std::string to_string() const {
        std::string out = severity == Severity::Error ? "error: " : "warning: ";
        if (line > 0) {
            out += std::to_string(line) + ":" + std::to_string(column) + ": ";
        }
        out += message;
        return out;
    }
};

/// Thrown on unrecoverable syntax or contract errors in any of the text
/// readers (XML, Turtle, SSSOM, sidecar files).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::uint64_t line = 0, std::uint64_t column = 0)
        : std::runtime_error(line > 0 ? std::to_string(line) + ":" + std::to_string(column) +
                                            ": " + message
                                      : message),
          line_(line),
          column_(column) {}

    std::uint64_t line() const { return line_; }
    std::uint64_t column() const { return column_; }

private:
    std::uint64_t line_;
    std::uint64_t column_;
};

}  // namespace animl
