#pragma once

#include <stdexcept>
#include <string>

namespace pbs {

/// Malformed or inconsistent user input (instance files, configs, flags).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A broken internal invariant: an algorithm reached a state its
/// construction rules out. Always a bug in this library.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pbs
