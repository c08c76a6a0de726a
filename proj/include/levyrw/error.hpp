#ifndef LEVYRW_ERROR_HPP
#define LEVYRW_ERROR_HPP

#include <stdexcept>
#include <string>

namespace levyrw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested target index lies beyond the environment's hard cap, or a
/// frozen environment was asked to grow.
class EnvironmentCapExceeded : public Error {
 public:
  using Error::Error;
};

class TimeOutOfRange : public Error {
 public:
  using Error::Error;
};

class InsufficientSamples : public Error {
 public:
  using Error::Error;
};

/// A density handed to the averaging checker is not a probability density or
/// is not monotone away from the origin.
class ConditionViolated : public Error {
 public:
  using Error::Error;
};

/// Bad user input: malformed config, unknown check, inconsistent parameters.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace levyrw

#endif  // LEVYRW_ERROR_HPP
