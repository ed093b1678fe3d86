#pragma once

#include <stdexcept>
#include <string>

namespace srg {

/// Precondition on the mathematical domain violated (e.g. d = 0, a hexagon
/// centre on the boundary, k outside the eigenvector family range).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input would exceed a configured size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coordinate index out of range or degenerate (i == j).
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Argument inconsistent with the ambient object (e.g. a permutation whose
/// inversion count differs from n).
class MismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A checked 64-bit coefficient operation overflowed.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A constructed object failed its own exact verification. Indicates a bug,
/// never a user error.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace srg
