#pragma once

#include <stdexcept>
#include <string>

namespace fockcb {

// Invalid user-supplied data (malformed symbols, charge mismatches, ...).
class BadInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A forced computation method whose applicability predicate does not hold.
class MethodInapplicableError : public std::runtime_error {
 public:
  explicit MethodInapplicableError(const std::string& predicate)
      : std::runtime_error("method inapplicable: " + predicate) {}
};

// Broken internal invariant (triangularity violations, overflow, ...).
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fockcb
