#pragma once

// The group of homomorphisms G -> H that are continuous at the identity:
// evaluation, the bounded sup metric over a probe set, and the Abelian group
// structure under pointwise composition.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mgd/group.hpp"
#include "mgd/report.hpp"
#include "mgd/tolerances.hpp"

namespace mgd {

/// Immutable expression tree of homomorphisms. Leaves are primitive maps;
/// inner nodes are the pointwise sum, the inverse, composition across Hom
/// spaces, and scalar multiples. Copies share the tree.
class Homomorphism {
 public:
  using Map = std::function<GroupElement(const GroupElement&)>;
  enum class Kind { primitive, oplus, inverse, composite, scaled };

  /// `lipschitz_at_identity`, when given, is a bound L with
  /// d(h(x), e) <= L d(x, e) near e; continuity checks hold the map to it.
  static Homomorphism primitive(GroupPtr domain, GroupPtr codomain, Map map, std::string label,
                                std::optional<double> lipschitz_at_identity = std::nullopt);
  /// sigma: every x goes to the identity of the codomain.
  static Homomorphism trivial(GroupPtr domain, GroupPtr codomain);
  static Homomorphism identity(GroupPtr group);

  GroupElement operator()(const GroupElement& x) const;

  const MetricGroupSpec& domain() const { return *domain_; }
  const MetricGroupSpec& codomain() const { return *codomain_; }
  const GroupPtr& domain_ptr() const { return domain_; }
  const GroupPtr& codomain_ptr() const { return codomain_; }
  const std::string& label() const { return label_; }
  Kind kind() const;
  std::optional<double> lipschitz_hint() const;

  friend Homomorphism oplus(const Homomorphism& lhs, const Homomorphism& rhs);
  friend Homomorphism hom_inverse(const Homomorphism& h);
  friend Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner);
  friend Homomorphism scalar(double alpha, const Homomorphism& h);

 private:
  struct Node;
  Homomorphism(GroupPtr domain, GroupPtr codomain, std::string label,
               std::shared_ptr<const Node> node);

  GroupPtr domain_;
  GroupPtr codomain_;
  std::string label_;
  std::shared_ptr<const Node> node_;
};

/// (lhs + rhs)[x] = lhs[x] * rhs[x]. Requires equal domains and codomains and
/// an Abelian codomain.
Homomorphism oplus(const Homomorphism& lhs, const Homomorphism& rhs);
/// h^{-1}[x] = h[x^{-1}].
Homomorphism hom_inverse(const Homomorphism& h);
/// (outer o inner)[x] = outer[inner[x]]. Requires outer.domain == inner.codomain.
Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner);
/// (alpha h)[x] = alpha . h[x]. Throws UnsupportedOperation when the codomain
/// has no scalar action.
Homomorphism scalar(double alpha, const Homomorphism& h);

inline GroupElement eval(const Homomorphism& h, const GroupElement& x) { return h(x); }

/// Finite stand-in for the whole domain when taking suprema.
class ProbeSet {
 public:
  /// Throws ContractViolation when empty or when points span several groups.
  ProbeSet(std::vector<GroupElement> points, std::string description);

  std::span<const GroupElement> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const std::string& group_id() const { return points_.front().group_id; }
  const std::string& description() const { return description_; }

  /// Union with another probe set on the same group (this one's points first).
  ProbeSet merged(const ProbeSet& other) const;

 private:
  std::vector<GroupElement> points_;
  std::string description_;
};

/// Identity, three points near it (radii 1e-6, 1e-5, 1e-4 times scale), and
/// the remaining points at log-spaced distances over [min_scale, max_scale]
/// times scale. Fewer than five points: log-spaced only.
ProbeSet make_probe_set(const MetricGroupSpec& g, std::uint64_t seed,
                        const ProbeOptions& opts = {});

/// max over probe points t of d/(1 + d), d = d_H(phi[t], psi[t]). This is a
/// lower bound on the sup over the whole domain. Always in [0, 1].
double hom_metric(const Homomorphism& phi, const Homomorphism& psi, const ProbeSet& probe,
                  Exec exec = Exec::parallel);

/// d(h[xy], h[x] h[y]) and d(h[e], e) within tol.hom relative to magnitudes.
VerificationReport check_homomorphism_law(const Homomorphism& h, std::uint64_t seed,
                                          std::size_t count, const CheckOptions& opts = {});

/// Associativity and commutativity of oplus, sigma neutrality and the inverse
/// law, evaluated through the expression trees at every probe point.
VerificationReport check_group_laws_on_hom(const Homomorphism& phi, const Homomorphism& psi,
                                           const Homomorphism& chi, const ProbeSet& probe,
                                           const CheckOptions& opts = {});

/// Symmetry (exact), triangle inequality (tol.fp, absolute), range [0, 1) and
/// monotonicity under enlarging `probe` to `larger` (which must contain it).
VerificationReport check_hom_metric_properties(const Homomorphism& phi, const Homomorphism& psi,
                                               const Homomorphism& chi, const ProbeSet& probe,
                                               const ProbeSet& larger,
                                               const CheckOptions& opts = {});

/// Max of d(h[x], e) over samples at each radius around e: nonincreasing as
/// the radius shrinks, below tol.limit at the smallest radius, and within the
/// Lipschitz hint when one is attached.
VerificationReport check_continuity_at_identity(const Homomorphism& h,
                                                const std::vector<double>& radii,
                                                std::uint64_t seed, std::size_t count,
                                                const CheckOptions& opts = {});

/// d_H(actual[t], expected(t)) at every probe point. max_violation is the
/// relative residual d / (1 + d(expected(t), e)) against tol.fp; details carry
/// the absolute maximum as "max_abs_residual".
VerificationReport check_hom_agreement(const Homomorphism& actual,
                                       const std::function<GroupElement(const GroupElement&)>& expected,
                                       const ProbeSet& probe, const CheckOptions& opts = {});

/// Records hom_metric(sequence[i], limit) for each i. Passes when the last
/// value is below tol.limit and the second half of the sequence is
/// nonincreasing within tol.fp.
VerificationReport pointwise_to_metric_convergence_probe(const std::vector<Homomorphism>& sequence,
                                                         const Homomorphism& limit,
                                                         const ProbeSet& probe,
                                                         const CheckOptions& opts = {});

}  // namespace mgd
