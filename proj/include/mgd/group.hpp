#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mgd/element.hpp"

namespace mgd {

/// Raw operations of a group, expressed on payloads. Optional operations are
/// left empty when the group does not provide them.
struct GroupOps {
  std::function<Payload(const Payload&, const Payload&)> compose;
  std::function<Payload(const Payload&)> inverse;
  Payload identity;
  std::function<double(const Payload&, const Payload&)> metric;
  /// Draws `count` elements; element i depends only on (seed, i-prefix).
  std::function<std::vector<Payload>(std::uint64_t seed, std::size_t count)> sampler;

  std::function<Payload(const Payload&, std::uint64_t n)> nth_root;
  std::function<Payload(double alpha, const Payload&)> scalar_action;
  /// One-parameter path t -> x^t through the identity, used to place samples
  /// at a prescribed distance from a point.
  std::function<Payload(const Payload&, double t)> real_power;
  /// Closed form of the right-translation constant c_k, when known.
  std::function<double(const Payload& k)> translation_constant;

  /// Throws ContractViolation when the payload is not a member of the group.
  std::function<void(const Payload&)> validate;
  std::function<nlohmann::json(const Payload&)> to_json;
};

struct GroupTraits {
  bool is_abelian = false;
  bool claims_group_metric = false;
  bool claims_divisible = false;
};

/// A metric group: operations plus the structural claims made about them.
/// Every member taking elements checks that they belong to this group.
class MetricGroupSpec {
 public:
  MetricGroupSpec(std::string id, std::string description, GroupOps ops, GroupTraits traits);

  const std::string& id() const { return id_; }
  const std::string& description() const { return description_; }
  const GroupTraits& traits() const { return traits_; }

  /// Wraps a payload as an element of this group after validating it.
  GroupElement element(Payload p) const;
  bool owns(const GroupElement& x) const { return x.group_id == id_; }
  void require_member(const GroupElement& x) const;

  GroupElement compose(const GroupElement& x, const GroupElement& y) const;
  GroupElement inverse(const GroupElement& x) const;
  const GroupElement& identity() const { return identity_; }
  double distance(const GroupElement& x, const GroupElement& y) const;
  /// n-fold composition x * x * ... * x; power(x, 0) is the identity.
  GroupElement power(const GroupElement& x, std::uint64_t n) const;

  bool has_nth_root() const { return static_cast<bool>(ops_.nth_root); }
  /// The unique (principal-branch) x with x^n = g. Requires a divisible group.
  GroupElement nth_root(const GroupElement& g, std::uint64_t n) const;

  bool has_scalar_action() const { return static_cast<bool>(ops_.scalar_action); }
  GroupElement scale(double alpha, const GroupElement& x) const;

  bool has_real_power() const { return static_cast<bool>(ops_.real_power); }
  GroupElement real_power(const GroupElement& x, double t) const;

  std::optional<double> exact_translation_constant(const GroupElement& k) const;

  std::vector<GroupElement> sample(std::uint64_t seed, std::size_t count) const;

  nlohmann::json to_json(const GroupElement& x) const;

  const GroupOps& ops() const { return ops_; }

 private:
  GroupElement wrap(Payload p) const { return {id_, std::move(p)}; }

  std::string id_;
  std::string description_;
  GroupOps ops_;
  GroupTraits traits_;
  GroupElement identity_;
};

using GroupPtr = std::shared_ptr<const MetricGroupSpec>;

/// Elements x with 0 < d(x, center) <= radius, built by shrinking sampled
/// directions along the group's real-power path and right-multiplying by the
/// center. Requires real_power.
std::vector<GroupElement> sample_near(const MetricGroupSpec& g, const GroupElement& center,
                                      double radius, std::uint64_t seed, std::size_t count);

/// Child seed for a named consumer, so adding consumers never shifts others.
std::uint64_t derive_seed(std::uint64_t root, std::string_view key);

}  // namespace mgd
