#pragma once

#include <stdexcept>
#include <string>

namespace eom {

/// Invalid argument: out-of-range offsets, malformed matrices, bad configs.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Parameters for which the requested quantity is undefined (e.g. Gamma = 0).
class DegenerateParameterError : public ParameterError {
 public:
  explicit DegenerateParameterError(const std::string& what) : ParameterError(what) {}
};

/// A computation route cannot handle the request (e.g. factorial overflow).
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace eom
