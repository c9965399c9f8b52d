#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eccwheel {

// Shape or size of an argument is incompatible with the operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An argument lies outside the domain where an object is defined, e.g. the
// wheel order is in the wrong residue class mod 3.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotSymmetricError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DisconnectedGraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, double last_estimate,
                      std::vector<double> last_iterate)
      : std::runtime_error(what),
        last_estimate_(last_estimate),
        last_iterate_(std::move(last_iterate)) {}

  double last_estimate() const { return last_estimate_; }
  const std::vector<double>& last_iterate() const { return last_iterate_; }

 private:
  double last_estimate_;
  std::vector<double> last_iterate_;
};

}  // namespace eccwheel
