#pragma once

#include <stdexcept>
#include <string>

namespace dunkl_lab {

/// Argument outside the mathematical domain of a special function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parameter outside the admissible Pitt range 0 <= beta < lambda + 1,
/// or another parameter range violation (grid bounds, scan sizes).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Sampled inputs that do not live on the grid a plan expects.
class GridMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input that cannot be processed (zero norm, underflowing mass, bad file).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dunkl_lab
