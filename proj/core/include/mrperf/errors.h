#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mrperf/params.h"

namespace mrperf {

// A job-spec, override or search-space document could not be read.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inputs violate one or more range or consistency constraints.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> violations)
      : std::runtime_error(format_violations(violations)),
        violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Valid inputs that drive a model formula into an undefined corner, e.g. a
// zero-byte shuffle segment.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configuration search in which no grid point could be evaluated.
class EmptyGridError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mrperf
