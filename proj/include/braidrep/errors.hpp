#pragma once

#include <stdexcept>
#include <string>

namespace braidrep {

/// Raised when an exhaustive computation would exceed its configured size bound
/// (free-word length, closure size, search degree).
class ResourceLimitExceeded : public std::runtime_error {
 public:
  explicit ResourceLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace braidrep
