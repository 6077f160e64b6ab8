#pragma once

#include <stdexcept>
#include <string>

namespace qsr {

// Raised when a brute-force enumeration or chain distribution would exceed
// its configured size guard.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& message) : std::runtime_error(message) {}
};

} // namespace qsr
