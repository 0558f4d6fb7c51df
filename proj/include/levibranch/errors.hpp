#pragma once

#include <stdexcept>
#include <string>

namespace levibranch {

// Unsupported root datum, malformed CLI input, bad sweep configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its precondition (e.g. a non-dominant
// highest weight).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation produced a state that the mathematics rules out. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A feasibility cap (crystal size, search box) was exceeded.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace levibranch
