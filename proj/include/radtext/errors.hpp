#pragma once

#include <stdexcept>
#include <string>

namespace radtext {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input (XML, CSV, CoNLL-U, bracketed trees, pattern strings).
// Carries a 1-based line/column when the format is line-oriented.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line = 0, int column = 0)
        : Error(format(msg, line, column)), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string format(const std::string& msg, int line, int column) {
        if (line <= 0) return msg;
        std::string s = msg + " (line " + std::to_string(line);
        if (column > 0) s += ", column " + std::to_string(column);
        s += ")";
        return s;
    }

    int line_;
    int column_;
};

// Structurally well-formed input that violates a data contract
// (offset mismatches, dangling references, duplicate ids).
class DataError : public Error {
public:
    explicit DataError(const std::string& msg) : Error(msg) {}
};

// Bad resource files or CLI configuration (missing columns, bad regex).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// A pipeline stage ran before its prerequisites.
class PipelineOrderError : public Error {
public:
    explicit PipelineOrderError(const std::string& msg) : Error(msg) {}
};

} // namespace radtext
