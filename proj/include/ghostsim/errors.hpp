#pragma once

#include <stdexcept>
#include <string>

namespace ghostsim {

/// Scene config file could not be parsed. `line` is 1-based, 0 when the
/// error is not tied to a specific line (e.g. unreadable file).
class ConfigError : public std::runtime_error {
public:
    ConfigError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "config line " + std::to_string(line) + ": " + what
                                      : "config: " + what),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// A quadrature grid does not resolve the worst-case chirp phase at the
/// required safety margin.
class NyquistError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A grid is smaller than the support it has to cover.
class GridTooSmallError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ghostsim
