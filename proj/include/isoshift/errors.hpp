#pragma once

#include <stdexcept>
#include <string>

namespace isoshift {

/// Invalid user-supplied configuration (bad branch index, out-of-range parameter).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameter choice that makes a closed form undefined (e.g. L2 with m = l + 1/2).
class DegenerateParameterError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A defining identity failed: signals a transcription bug, never user error.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Potential is not finite on a solver node.
class SingularPotentialError : public std::runtime_error {
 public:
  SingularPotentialError(const std::string& what, double node) : std::runtime_error(what), node_(node) {}
  double node() const { return node_; }

 private:
  double node_;
};

}  // namespace isoshift
