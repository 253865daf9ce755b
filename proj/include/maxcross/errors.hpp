#pragma once

#include <stdexcept>
#include <string>

namespace maxcross {

// Out-of-range or inconsistent parameters. CLI exit status 2.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A requested search or enumeration is larger than the configured cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Collinear or coincident points where general position is required.
// CLI exit status 3.
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction produced something other than what it promised.
// CLI exit status 3.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw ArgumentError(message);
}

}  // namespace detail
}  // namespace maxcross
