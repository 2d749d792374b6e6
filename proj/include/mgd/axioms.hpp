#pragma once

// Sampled checks of metric, group and group-metric axioms, plus divisibility.

#include <cstdint>

#include "mgd/group.hpp"
#include "mgd/report.hpp"
#include "mgd/tolerances.hpp"

namespace mgd {

/// Symmetry (exact), d(x,x) = 0 (exact), nonnegativity, d(x,y) = 0 only for
/// x = y, and the triangle inequality within tol.fp relative to the sides.
VerificationReport check_metric_axioms(const MetricGroupSpec& g, std::uint64_t seed,
                                       std::size_t count, const CheckOptions& opts = {});

/// Associativity, two-sided identity and inverse, and commutativity when the
/// group is flagged Abelian, within tol.fp relative to operand magnitudes.
VerificationReport check_group_axioms(const MetricGroupSpec& g, std::uint64_t seed,
                                      std::size_t count, const CheckOptions& opts = {});

/// Product bound d(xy, e) <= d(x,e) d(y,e) + d(x,e) + d(y,e) on sampled pairs.
/// max_violation is (lhs - rhs) / (1 + rhs) and may be negative.
VerificationReport check_group_metric_axiom1(const MetricGroupSpec& g, std::uint64_t seed,
                                             std::size_t count, const CheckOptions& opts = {});

/// Lipschitz constant of right translation by k: d(xk, yk) <= c_k d(x, y).
struct TranslationConstant {
  GroupElement k;
  double c_k = 0.0;
  bool exact = false;
  /// max over samples of d(xk, yk) / d(x, y)
  double sampled_ratio = 0.0;
  std::size_t samples = 0;
  std::size_t skipped = 0;
};

/// Closed form when the group supplies one, otherwise the sampled maximum.
/// Pairs with d(x, y) = 0 are skipped. Throws EstimationError when every pair
/// is degenerate and ContractViolation when the group makes no group-metric claim.
TranslationConstant estimate_translation_constant(const MetricGroupSpec& g, const GroupElement& k,
                                                  std::uint64_t seed, std::size_t count,
                                                  Exec exec = Exec::parallel);

/// Passes when c_k > 0 and every sampled ratio is within c_k (1 + tol.fp).
VerificationReport check_translation_constant(const MetricGroupSpec& g, const GroupElement& k,
                                              std::uint64_t seed, std::size_t count,
                                              const CheckOptions& opts = {});

/// Unique n-th root on the group's fixed branch. Throws UnsupportedOperation
/// for non-divisible groups.
GroupElement nth_root(const MetricGroupSpec& g, const GroupElement& x, std::uint64_t n);

/// d(root(g, n)^n, g) <= tol.root (1 + d(g, e)); sample i uses n = 1 + i mod n_max,
/// and the last sample always uses n_max.
VerificationReport check_nth_root_roundtrip(const MetricGroupSpec& g, std::uint64_t seed,
                                            std::size_t count, std::uint64_t n_max = 64,
                                            const CheckOptions& opts = {});

/// Sequence d(x^(1/n), e) for n = 1..n_max: strictly decreasing until it hits
/// zero, and below tol.limit at n_max.
VerificationReport check_root_limit(const MetricGroupSpec& g, const GroupElement& x,
                                    std::uint64_t n_max, const CheckOptions& opts = {});

}  // namespace mgd
