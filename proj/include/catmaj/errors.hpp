#pragma once

#include <stdexcept>
#include <string>

namespace catmaj {

// Thrown when a configured size/iteration budget would be exceeded.
// CLI maps this to exit code 3.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Thrown when a documented operation precondition does not hold.
class precondition_error : public std::invalid_argument {
 public:
  explicit precondition_error(const std::string& what)
      : std::invalid_argument(what) {}
};

// Thrown when a sign decision (e.g. comparing two entropies) cannot be
// resolved even at the highest configured float precision.
class precision_exhausted_error : public std::runtime_error {
 public:
  explicit precision_exhausted_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace catmaj
