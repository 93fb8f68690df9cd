#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace reuleaux {

using Vec3 = Eigen::Vector3d;

/// Invalid argument supplied by the caller (bad size, malformed graph, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on data that does not satisfy its documented
/// precondition (non-tight point set, non-extremal configuration, ...).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A result failed its own post-verification. Signals a numerical problem or
/// a contradiction with a theorem the code relies on; never swallowed.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Size caps (chromatic search, enumeration order, realization size).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A local graph operation produced a non-polyhedral result; callers are
/// expected to retry with another choice.
class RejectionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace reuleaux
