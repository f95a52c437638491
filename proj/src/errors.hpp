#pragma once

#include <stdexcept>
#include <string>

namespace msokit {

// Malformed input: bad syntax, unknown symbols, violated preconditions.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configured cap would be exceeded; the operation refuses rather than
// truncating silently.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace msokit
