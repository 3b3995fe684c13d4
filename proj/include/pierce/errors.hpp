#pragma once

#include <stdexcept>
#include <string>

namespace pierce {

/// Caller violated a documented precondition (mixed fields, duplicates, role overlap).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well-formed but geometrically or algebraically degenerate.
class DegenerateInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested operation is not available for this field or representation.
class Unsupported : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pierce
