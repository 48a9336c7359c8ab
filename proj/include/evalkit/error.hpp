#pragma once

#include <stdexcept>
#include <string>

namespace evalkit {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid data: broken invariants in trial sets, cost matrices, priors, plans.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// File parsing and serialization failures. Carries file/line context in the message.
class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

// A metric that is undefined on its input (e.g. a class with positive prior
// but no samples). Bootstrap replicates catch this one specifically.
class MetricError : public Error {
 public:
  explicit MetricError(const std::string& msg) : Error(msg) {}
};

// Bad run configuration: unknown metric name, inconsistent parameters.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace evalkit
