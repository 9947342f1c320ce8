#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace xorsig {

// Malformed input text. line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// A caller broke an operation's precondition.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// An engine declined to run on this input (size caps, unsupported clause widths).
class EngineRefusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace xorsig
