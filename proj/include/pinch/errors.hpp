#pragma once

#include <stdexcept>

namespace pinch {

/// An argument lies outside the domain of the requested operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The operation exists only for some geometries (quotient bounds are Euclidean).
class UnsupportedGeometry : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The pinch is degenerate (kappa1 == kappa2) and the quantity is undefined.
class DegenerateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A body does not satisfy the curvature pinching it is checked against.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace pinch
