#pragma once

#include <stdexcept>
#include <string>

namespace posetlab {

/// Raised when an operation's precondition is violated by its input.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace posetlab
