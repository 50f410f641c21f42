#pragma once

#include <stdexcept>
#include <string>

namespace blochgeom {

/// Precondition or input violation (bad dimension, non-unit trace, malformed file).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Failure of a numerical routine on otherwise valid input.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace blochgeom
