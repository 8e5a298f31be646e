#pragma once

#include <stdexcept>
#include <string>

namespace ads {

// Argument outside the domain of an operation (e.g. log_map off the diamond).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An integration produced a NaN or infinity.
class NonFiniteState : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ads
