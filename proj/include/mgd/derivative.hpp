#pragma once

// Caratheodory differentiability between metric groups: f is differentiable
// at a when, near a, f(x) f(a)^{-1} = phi(x)[x a^{-1}] for a slope function
// phi into Hom(G; H) that is continuous at a. The derivative is phi(a).

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <string>
#include <vector>

#include "mgd/homspace.hpp"

namespace mgd {

/// A map between two registered groups.
class GroupFunction {
 public:
  using Map = std::function<GroupElement(const GroupElement&)>;

  GroupFunction(GroupPtr domain, GroupPtr codomain, Map map, std::string label);

  GroupElement operator()(const GroupElement& x) const;

  const MetricGroupSpec& domain() const { return *domain_; }
  const MetricGroupSpec& codomain() const { return *codomain_; }
  const GroupPtr& domain_ptr() const { return domain_; }
  const GroupPtr& codomain_ptr() const { return codomain_; }
  const std::string& label() const { return label_; }

 private:
  GroupPtr domain_;
  GroupPtr codomain_;
  Map map_;
  std::string label_;
};

/// (f + g)(x) = f(x) * g(x) in the codomain.
GroupFunction function_sum(const GroupFunction& f, const GroupFunction& g);
/// (alpha f)(x) = alpha . f(x); the codomain needs a scalar action.
GroupFunction function_scale(double alpha, const GroupFunction& f);
/// (g o f)(x) = g(f(x)).
GroupFunction function_compose(const GroupFunction& g, const GroupFunction& f);

/// Slope function of `function` at `base`: x -> slope_at(x) in Hom(G; H),
/// claimed to factor f on the open ball of `radius` around base. Only Abelian
/// codomains are accepted, so the order in f(x) f(a)^{-1} does not matter.
class SlopeFunction {
 public:
  using SlopeMap = std::function<Homomorphism(const GroupElement&)>;

  SlopeFunction(GroupFunction function, GroupElement base, double radius, SlopeMap slope_at,
                std::string label);

  const GroupFunction& function() const { return function_; }
  const GroupElement& base() const { return base_; }
  double radius() const { return radius_; }
  const std::string& label() const { return label_; }

  /// The slope at x; checked to be a homomorphism between f's domain and codomain.
  Homomorphism slope_at(const GroupElement& x) const;

 private:
  GroupFunction function_;
  GroupElement base_;
  double radius_;
  SlopeMap slope_at_;
  std::string label_;
};

struct DifferentiabilityReport {
  std::vector<double> radii;
  /// Per radius: max over samples of d_H(f(x) f(a)^{-1}, phi(x)[x a^{-1}]).
  std::vector<double> residual_by_radius;
  /// Per radius: max over samples of (residual - allowed); <= 0 everywhere to pass.
  std::vector<double> excess_by_radius;
  /// Per radius: max over samples of hom_metric(phi(x), phi(a)) on the probe set.
  std::vector<double> continuity_profile;
  std::optional<std::vector<double>> uniqueness_profile;
  double max_factorization_residual = 0.0;
  double tol_fact = 0.0;
  double tol_fact_rel = 0.0;
  double tol_limit = 0.0;
  std::size_t samples_per_radius = 0;
  std::string probe;
  nlohmann::json witness;
  bool passed = false;

  VerificationReport to_report() const;
};

/// Samples x at each radius around a, measures the factorization residual
/// against tol.fact + tol.fact_rel d_H(f(x), e), and the continuity profile of
/// the slope. Radii must be strictly decreasing and below s.radius().
DifferentiabilityReport check_differentiable(const GroupFunction& f, const SlopeFunction& s,
                                             const std::vector<double>& radii,
                                             std::uint64_t seed, std::size_t count,
                                             const CheckOptions& opts = {});

/// Factorization residual d_H(f(x) f(a)^{-1}, phi_a(x)[x a^{-1}]) on explicit
/// (x, a) pairs, with phi_a = slope_for(a). Same tolerance rule as
/// check_differentiable; neighborhoods are not consulted.
VerificationReport check_factorization_pairs(
    const GroupFunction& f, const std::function<SlopeFunction(const GroupElement&)>& slope_for,
    const std::vector<std::pair<GroupElement, GroupElement>>& pairs,
    const CheckOptions& opts = {});

/// phi(a).
Homomorphism derivative_at(const SlopeFunction& s);

/// Follows x_n = z^{1/n} a for n = 1, 2, 4, ..., n_max. Passes when the two
/// derivatives agree on the probe (hom_metric < tol.limit) and both slopes
/// converge to their value at a along the sequence. details carry
/// "metric_at_base" and both sequences. Needs a divisible domain.
VerificationReport uniqueness_probe(const SlopeFunction& s1, const SlopeFunction& s2,
                                    const GroupElement& z, std::uint64_t n_max,
                                    const ProbeSet& probe, const CheckOptions& opts = {});

/// Max of d_H(f(x), f(a)) over samples at each radius: nonincreasing within
/// `slack` and below tol.modulus at the smallest radius.
VerificationReport continuity_from_differentiability(const GroupFunction& f,
                                                     const SlopeFunction& s,
                                                     const std::vector<double>& radii,
                                                     std::uint64_t seed, std::size_t count,
                                                     const CheckOptions& opts = {},
                                                     double slack = 1e-12);

/// Slope of f + g: x -> phi_f(x) (+) phi_g(x); radius is the smaller one.
SlopeFunction slope_sum(const SlopeFunction& s_f, const SlopeFunction& s_g);

/// Slope of alpha f: x -> alpha phi_f(x).
SlopeFunction slope_scale(double alpha, const SlopeFunction& s_f);

/// Slope of g o f at a: x -> phi_g(f(x)) o phi_f(x). s_g must be based at
/// f(a). The radius is the largest of s_f.radius() / 2^k for which sampled
/// points map inside s_g's ball.
SlopeFunction slope_chain(const SlopeFunction& s_g, const SlopeFunction& s_f,
                          std::uint64_t seed = 0, std::size_t count = 256);

/// Difference quotient (1/h) . (f(a + h Y) - f(a)) in additive notation.
/// Domain and codomain need scalar actions; h > 0.
GroupElement frechet_fd_oracle(const GroupFunction& f, const GroupElement& a,
                               const GroupElement& y, double h);

}  // namespace mgd
