#pragma once

#include <stdexcept>
#include <string>

namespace polaron {

/// Malformed input, violated precondition or inconsistent parameters.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Requested Hilbert space exceeds the configured dimension cap.
class DimensionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

inline void require(bool cond, const std::string& what)
{
    if (!cond) throw ValidationError(what);
}

}  // namespace polaron
