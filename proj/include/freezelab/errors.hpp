#pragma once

#include <stdexcept>
#include <string>

namespace freezelab {

// Thrown when a computation would exceed a configured size, time or memory cap.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input files or arguments.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace freezelab
