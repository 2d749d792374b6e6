#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mgd/kernels.hpp"

namespace mgd {

/// Numeric thresholds shared by every check. Relative ones are scaled by
/// the magnitudes involved at the sample where they are applied.
struct Tolerances {
  double fp = 1e-9;        // group and metric axioms (relative)
  double hom = 1e-9;       // homomorphism law (relative)
  double fact = 1e-10;     // factorization residual, absolute part
  double fact_rel = 1e-9;  // factorization residual, relative to d(f(x), e)
  double root = 1e-10;     // n-fold power of an n-th root (relative)
  double limit = 1e-2;     // tail value of limit / continuity profiles
  double modulus = 1e-5;   // modulus of continuity of f at the smallest radius

  /// Sets a field by its short name ("fp", "hom", "fact", ...).
  /// Throws ConfigurationError for unknown names or negative values.
  void set(std::string_view name, double value);
  double get(std::string_view name) const;

  static const std::vector<std::string>& names();
};

/// Sampling grid for probe sets used to approximate the sup metric.
struct ProbeOptions {
  std::size_t count = 64;
  double min_scale = 1e-2;
  double max_scale = 1e2;
  double scale = 1.0;
};

struct CheckOptions {
  Tolerances tol;
  ProbeOptions probe;
  Exec exec = Exec::parallel;
};

}  // namespace mgd
