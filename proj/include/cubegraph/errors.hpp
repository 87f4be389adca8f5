#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubegraph {

// enumeration would exceed the configured state budget
class BudgetExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// malformed external input; carries a 1-based line number when one is known
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_ = 0;
};

// structurally valid input that falls outside the supported graph class
class UnsupportedGraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cubegraph
