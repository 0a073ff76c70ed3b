#ifndef KICKCAST_ERRORS_HPP
#define KICKCAST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kickcast {

/// Filesystem-level failure: missing file, unwritable path.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed file contents. Carries the 1-based line number when known (0 = unknown).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Structural mismatch between two artifacts: widths, schema versions, magic strings.
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Non-finite value produced during numeric work (training, evaluation).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace kickcast

#endif  // KICKCAST_ERRORS_HPP
