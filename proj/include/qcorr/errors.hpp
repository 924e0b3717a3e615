#pragma once

#include <stdexcept>
#include <string>

namespace qcorr {

/// Argument outside the mathematical domain of a closed form.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// State fails the positivity test (or a nonphysical state reached an
/// operation that requires a physical one).
class NonPhysical : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input for which the requested quantity is undefined (e.g. kappa = 0).
class DegenerateInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The correlation matrix annihilates the requested direction; there is no
/// optimal measurement and the caller must use the no-correlation branch.
class ZeroCorrelation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qcorr
