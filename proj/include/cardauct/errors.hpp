#pragma once

#include <stdexcept>
#include <string>

namespace cardauct {

// Malformed input: files, CLI values, ill-formed instances, bad query args.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Grid or run configuration that cannot express the requested computation.
class ConfigError : public InputError {
public:
  using InputError::InputError;
};

// Instance exceeds an enumeration budget (oracle max_n, profile scans).
class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Requested allocation size has no feasible winner set.
class NoAllocationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace cardauct
