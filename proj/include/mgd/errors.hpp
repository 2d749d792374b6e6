#pragma once

#include <stdexcept>

namespace mgd {

/// Caller broke a precondition: mixed groups, bad radius, empty probe set.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The group does not provide the requested optional operation.
class UnsupportedOperation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: unknown names, invalid counts or tolerances.
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sampled estimate could not be formed (every sample was degenerate).
class EstimationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mgd
