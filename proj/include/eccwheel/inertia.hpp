#pragma once

#include <string>

namespace eccwheel {

// Counts of positive, negative and zero eigenvalues of a symmetric matrix.
struct InertiaTriple {
  long n_plus = 0;
  long n_minus = 0;
  long n_zero = 0;

  long order() const { return n_plus + n_minus + n_zero; }
  long rank() const { return n_plus + n_minus; }
  std::string to_string() const {
    return "(" + std::to_string(n_plus) + "," + std::to_string(n_minus) + "," +
           std::to_string(n_zero) + ")";
  }
  friend bool operator==(const InertiaTriple&, const InertiaTriple&) = default;
};

}  // namespace eccwheel
