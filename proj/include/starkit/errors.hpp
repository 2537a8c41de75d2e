#pragma once

#include <stdexcept>
#include <string>

namespace starkit {

// Parameter or input outside the supported domain.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A generated object broke a structural invariant it must satisfy.
struct StructureError : std::logic_error {
  using std::logic_error::logic_error;
};

// A search exceeded its configured budget.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace starkit
