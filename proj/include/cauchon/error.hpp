#pragma once

#include <stdexcept>
#include <string>

namespace cauchon {

// Precondition or input-domain violation (bad index, malformed file, zero
// seed on a white cell, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An enumeration or search exceeded its configured guard.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two routes that must agree did not.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cauchon
