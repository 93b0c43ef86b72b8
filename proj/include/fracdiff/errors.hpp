#pragma once

#include <stdexcept>
#include <string>

namespace fracdiff {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// frac_core validation
class OrderOutOfRange : public Error { public: using Error::Error; };
class NonPositiveDiffusivity : public Error { public: using Error::Error; };
class DegenerateGrid : public Error { public: using Error::Error; };
class MissingInitialRate : public Error { public: using Error::Error; };

// special functions
class PoleArgument : public Error { public: using Error::Error; };

// weight / operator plumbing
class InvalidCount : public Error { public: using Error::Error; };
class IndexOutOfRange : public Error { public: using Error::Error; };
class NonPositiveTime : public Error { public: using Error::Error; };

// solvers
class SingularSystem : public Error { public: using Error::Error; };

/// Thrown by a stepper when a value crosses the divergence threshold.
/// Carries the offending magnitude so reports can record it.
class Diverged : public Error {
public:
    Diverged(const std::string& what, double max_abs)
        : Error(what), max_abs_value(max_abs) {}
    double max_abs_value;
};

// verification
class InvalidPower : public Error { public: using Error::Error; };
class NonConstantBCs : public Error { public: using Error::Error; };
class UnstableMember : public Error { public: using Error::Error; };

/// Configuration errors carry a 1-based source position.
class ConfigError : public Error {
public:
    ConfigError(const std::string& what, int line, int column)
        : Error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line), column(column) {}
    int line;
    int column;
};

class UnknownKey : public ConfigError { public: using ConfigError::ConfigError; };
class MalformedValue : public ConfigError { public: using ConfigError::ConfigError; };
class MissingRequired : public Error { public: using Error::Error; };

} // namespace fracdiff
