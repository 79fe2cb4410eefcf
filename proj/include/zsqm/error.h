#pragma once

#include <stdexcept>
#include <string>

namespace zsqm {

// Operands of incompatible length or dimension.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// A size guard (rank cap, total dimension, closure size) was exceeded.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zsqm
