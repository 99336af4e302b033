#pragma once

#include <stdexcept>
#include <string>

namespace tfw {

// Domain errors: the input is outside an operation's domain (exit code 2 in the CLI).
struct DomainError : std::runtime_error {
    std::string code;
    DomainError(std::string c, const std::string& msg)
        : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

// Numeric errors: a certified computation could not be completed (exit code 3).
struct NumericError : std::runtime_error {
    std::string code;
    NumericError(std::string c, const std::string& msg)
        : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

inline DomainError domain_error(const std::string& code, const std::string& msg) {
    return DomainError(code, msg);
}
inline NumericError numeric_error(const std::string& code, const std::string& msg) {
    return NumericError(code, msg);
}

} // namespace tfw
