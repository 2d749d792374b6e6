#include "mgd/group.hpp"

#include <cmath>

#include "mgd/errors.hpp"

namespace mgd {

MetricGroupSpec::MetricGroupSpec(std::string id, std::string description, GroupOps ops,
                                 GroupTraits traits)
    : id_(std::move(id)),
      description_(std::move(description)),
      ops_(std::move(ops)),
      traits_(traits) {
  if (!ops_.compose || !ops_.inverse || !ops_.metric || !ops_.sampler) {
    throw ConfigurationError("group '" + id_ + "' is missing a required operation");
  }
  if (traits_.claims_divisible && !ops_.nth_root) {
    throw ConfigurationError("group '" + id_ + "' claims divisibility without an nth_root");
  }
  identity_ = wrap(ops_.identity);
}

GroupElement MetricGroupSpec::element(Payload p) const {
  if (ops_.validate) ops_.validate(p);
  return wrap(std::move(p));
}

void MetricGroupSpec::require_member(const GroupElement& x) const {
  if (x.group_id != id_) {
    throw ContractViolation("element of group '" + x.group_id + "' used with group '" + id_ +
                            "'");
  }
}

GroupElement MetricGroupSpec::compose(const GroupElement& x, const GroupElement& y) const {
  require_member(x);
  require_member(y);
  return wrap(ops_.compose(x.payload, y.payload));
}

GroupElement MetricGroupSpec::inverse(const GroupElement& x) const {
  require_member(x);
  return wrap(ops_.inverse(x.payload));
}

double MetricGroupSpec::distance(const GroupElement& x, const GroupElement& y) const {
  require_member(x);
  require_member(y);
  return ops_.metric(x.payload, y.payload);
}

GroupElement MetricGroupSpec::power(const GroupElement& x, std::uint64_t n) const {
  require_member(x);
  Payload acc = ops_.identity;
  for (std::uint64_t i = 0; i < n; ++i) acc = ops_.compose(acc, x.payload);
  return wrap(std::move(acc));
}

GroupElement MetricGroupSpec::nth_root(const GroupElement& g, std::uint64_t n) const {
  require_member(g);
  if (!traits_.claims_divisible || !ops_.nth_root) {
    throw UnsupportedOperation("group '" + id_ + "' is not divisible; nth_root unavailable");
  }
  if (n == 0) throw ContractViolation("nth_root needs n >= 1");
  if (n == 1) return g;
  return wrap(ops_.nth_root(g.payload, n));
}

GroupElement MetricGroupSpec::scale(double alpha, const GroupElement& x) const {
  require_member(x);
  if (!ops_.scalar_action) {
    throw UnsupportedOperation("group '" + id_ + "' has no scalar action");
  }
  return wrap(ops_.scalar_action(alpha, x.payload));
}

GroupElement MetricGroupSpec::real_power(const GroupElement& x, double t) const {
  require_member(x);
  if (!ops_.real_power) {
    throw UnsupportedOperation("group '" + id_ + "' has no real-power path");
  }
  return wrap(ops_.real_power(x.payload, t));
}

std::optional<double> MetricGroupSpec::exact_translation_constant(const GroupElement& k) const {
  require_member(k);
  if (!ops_.translation_constant) return std::nullopt;
  return ops_.translation_constant(k.payload);
}

std::vector<GroupElement> MetricGroupSpec::sample(std::uint64_t seed, std::size_t count) const {
  std::vector<Payload> raw = ops_.sampler(seed, count);
  if (raw.size() != count) {
    throw ConfigurationError("sampler of group '" + id_ + "' returned " +
                             std::to_string(raw.size()) + " elements, expected " +
                             std::to_string(count));
  }
  std::vector<GroupElement> out;
  out.reserve(count);
  for (auto& p : raw) out.push_back(wrap(std::move(p)));
  return out;
}

nlohmann::json MetricGroupSpec::to_json(const GroupElement& x) const {
  require_member(x);
  if (ops_.to_json) return ops_.to_json(x.payload);
  return nullptr;
}

std::vector<GroupElement> sample_near(const MetricGroupSpec& g, const GroupElement& center,
                                      double radius, std::uint64_t seed, std::size_t count) {
  if (!(radius > 0.0)) throw ContractViolation("sample radius must be positive");
  // Oversample directions so that degenerate ones (at the identity) can be dropped.
  const auto directions = g.sample(seed, count * 2 + 8);
  std::vector<GroupElement> out;
  out.reserve(count);
  for (const auto& u : directions) {
    if (out.size() == count) break;
    const double du = g.distance(u, g.identity());
    if (!(du > 0.0) || !std::isfinite(du)) continue;
    double t = radius / du;
    for (int halvings = 0; halvings < 64; ++halvings, t *= 0.5) {
      GroupElement x = g.compose(g.real_power(u, t), center);
      const double d = g.distance(x, center);
      if (d <= radius) {
        if (d > 0.0) out.push_back(std::move(x));
        break;
      }
    }
  }
  if (out.size() != count) {
    throw EstimationError("could not place " + std::to_string(count) + " samples within radius " +
                          std::to_string(radius) + " in group '" + g.id() + "'");
  }
  return out;
}

std::uint64_t derive_seed(std::uint64_t root, std::string_view key) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : key) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  // splitmix64 finalizer over root ^ hash(key)
  std::uint64_t z = root ^ h;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace mgd
