#include "mgd/derivative.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mgd/errors.hpp"

namespace mgd {

namespace {

constexpr double kSameBaseRel = 1e-12;
constexpr std::size_t kContinuitySamples = 8;

bool same_point(const MetricGroupSpec& g, const GroupElement& x, const GroupElement& y) {
  return g.distance(x, y) <= kSameBaseRel * (1.0 + g.distance(x, g.identity()));
}

void require_strictly_decreasing(const std::vector<double>& radii) {
  if (radii.empty()) throw ContractViolation("need at least one radius");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0)) throw ContractViolation("radii must be positive");
    if (i > 0 && !(radii[i] < radii[i - 1])) {
      throw ContractViolation("radii must be strictly decreasing");
    }
  }
}

void require_same_function(const GroupFunction& f, const SlopeFunction& s) {
  const GroupFunction& g = s.function();
  if (f.label() != g.label() || f.domain().id() != g.domain().id() ||
      f.codomain().id() != g.codomain().id()) {
    throw ContractViolation("slope '" + s.label() + "' does not factor function '" + f.label() +
                            "'");
  }
}

}  // namespace

GroupFunction::GroupFunction(GroupPtr domain, GroupPtr codomain, Map map, std::string label)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      map_(std::move(map)),
      label_(std::move(label)) {
  if (!domain_ || !codomain_ || !map_) throw ContractViolation("incomplete group function");
}

GroupElement GroupFunction::operator()(const GroupElement& x) const {
  domain_->require_member(x);
  GroupElement y = map_(x);
  codomain_->require_member(y);
  return y;
}

GroupFunction function_sum(const GroupFunction& f, const GroupFunction& g) {
  if (f.domain().id() != g.domain().id() || f.codomain().id() != g.codomain().id()) {
    throw ContractViolation("function_sum: functions map between different groups");
  }
  GroupPtr h = f.codomain_ptr();
  return GroupFunction(f.domain_ptr(), h,
                       [f, g, h](const GroupElement& x) { return h->compose(f(x), g(x)); },
                       "(" + f.label() + " + " + g.label() + ")");
}

GroupFunction function_scale(double alpha, const GroupFunction& f) {
  if (!f.codomain().has_scalar_action()) {
    throw UnsupportedOperation("scalar multiple of a function needs a scalar action on '" +
                               f.codomain().id() + "'");
  }
  GroupPtr h = f.codomain_ptr();
  return GroupFunction(f.domain_ptr(), h,
                       [alpha, f, h](const GroupElement& x) { return h->scale(alpha, f(x)); },
                       std::to_string(alpha) + "*" + f.label());
}

GroupFunction function_compose(const GroupFunction& g, const GroupFunction& f) {
  if (f.codomain().id() != g.domain().id()) {
    throw ContractViolation("function_compose: codomain of '" + f.label() +
                            "' is not the domain of '" + g.label() + "'");
  }
  return GroupFunction(f.domain_ptr(), g.codomain_ptr(),
                       [f, g](const GroupElement& x) { return g(f(x)); },
                       g.label() + " o " + f.label());
}

SlopeFunction::SlopeFunction(GroupFunction function, GroupElement base, double radius,
                             SlopeMap slope_at, std::string label)
    : function_(std::move(function)),
      base_(std::move(base)),
      radius_(radius),
      slope_at_(std::move(slope_at)),
      label_(std::move(label)) {
  function_.domain().require_member(base_);
  if (!(radius_ > 0.0)) throw ContractViolation("slope neighborhood radius must be positive");
  if (!slope_at_) throw ContractViolation("slope function needs a slope map");
  if (!function_.codomain().traits().is_abelian) {
    throw ContractViolation("slope functions need an Abelian codomain; '" +
                            function_.codomain().id() + "' is not");
  }
}

Homomorphism SlopeFunction::slope_at(const GroupElement& x) const {
  function_.domain().require_member(x);
  Homomorphism h = slope_at_(x);
  if (h.domain().id() != function_.domain().id() ||
      h.codomain().id() != function_.codomain().id()) {
    throw ContractViolation("slope '" + label_ + "' produced a map outside Hom(" +
                            function_.domain().id() + "; " + function_.codomain().id() + ")");
  }
  return h;
}

VerificationReport DifferentiabilityReport::to_report() const {
  VerificationReport r;
  r.samples = samples_per_radius * radii.size();
  r.tolerance = tol_fact;
  r.max_violation = max_factorization_residual;
  r.passed = passed;
  r.witness = witness;
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t k = 0; k < radii.size(); ++k) {
    rows.push_back({{"radius", radii[k]},
                    {"max_residual", number_json(residual_by_radius[k])},
                    {"max_excess", number_json(excess_by_radius[k])},
                    {"slope_hom_distance", number_json(continuity_profile[k])}});
  }
  r.details["profile"] = std::move(rows);
  r.details["tolerance_fact_rel"] = tol_fact_rel;
  r.details["tolerance_limit"] = tol_limit;
  r.details["probe"] = probe;
  if (uniqueness_profile) {
    nlohmann::json u = nlohmann::json::array();
    for (double v : *uniqueness_profile) u.push_back(number_json(v));
    r.details["uniqueness_profile"] = std::move(u);
  }
  return r;
}

DifferentiabilityReport check_differentiable(const GroupFunction& f, const SlopeFunction& s,
                                             const std::vector<double>& radii,
                                             std::uint64_t seed, std::size_t count,
                                             const CheckOptions& opts) {
  require_same_function(f, s);
  require_strictly_decreasing(radii);
  if (count == 0) throw ContractViolation("sample count must be >= 1");
  if (!(radii.front() < s.radius())) {
    throw ContractViolation("radius " + std::to_string(radii.front()) +
                            " is not inside the slope neighborhood " +
                            std::to_string(s.radius()));
  }
  const auto& G = f.domain();
  const auto& H = f.codomain();
  const GroupElement& a = s.base();
  const GroupElement fa = f(a);
  const GroupElement fa_inv = H.inverse(fa);
  const GroupElement a_inv = G.inverse(a);
  const Homomorphism slope_a = s.slope_at(a);
  const ProbeSet probe = make_probe_set(G, derive_seed(seed, "probe"), opts.probe);

  DifferentiabilityReport rep;
  rep.radii = radii;
  rep.tol_fact = opts.tol.fact;
  rep.tol_fact_rel = opts.tol.fact_rel;
  rep.tol_limit = opts.tol.limit;
  rep.samples_per_radius = count;
  rep.probe = probe.description();

  bool factor_ok = true;
  for (std::size_t k = 0; k < radii.size(); ++k) {
    const auto xs = sample_near(G, a, radii[k], derive_seed(seed, "radius-" + std::to_string(k)),
                                count);
    auto residual = [&](std::size_t i) {
      const GroupElement fx = f(xs[i]);
      const GroupElement lhs = H.compose(fx, fa_inv);
      const GroupElement rhs = s.slope_at(xs[i])(G.compose(xs[i], a_inv));
      return H.distance(lhs, rhs);
    };
    auto excess = [&](std::size_t i) {
      const double allowed = opts.tol.fact + opts.tol.fact_rel * H.distance(f(xs[i]), H.identity());
      return residual(i) - allowed;
    };
    const Extremum res = max_over(opts.exec, xs.size(), residual);
    const Extremum exc = max_over(opts.exec, xs.size(), excess);
    rep.residual_by_radius.push_back(res.value);
    rep.excess_by_radius.push_back(exc.value);
    rep.max_factorization_residual = std::max(rep.max_factorization_residual, res.value);
    if (exc.value > 0.0 && factor_ok) {
      factor_ok = false;
      rep.witness = {{"x", G.to_json(xs[exc.index])},
                     {"a", G.to_json(a)},
                     {"radius", radii[k]},
                     {"residual", number_json(residual(exc.index))}};
    }

    double profile = 0.0;
    const std::size_t m = std::min(count, kContinuitySamples);
    for (std::size_t i = 0; i < m; ++i) {
      profile = std::max(profile, hom_metric(s.slope_at(xs[i]), slope_a, probe, opts.exec));
    }
    rep.continuity_profile.push_back(profile);
  }

  bool continuity_ok = rep.continuity_profile.back() < opts.tol.limit;
  for (std::size_t k = 1; k < rep.continuity_profile.size(); ++k) {
    continuity_ok = continuity_ok &&
                    rep.continuity_profile[k] <= rep.continuity_profile[k - 1] + opts.tol.fp;
  }
  if (factor_ok && !continuity_ok) {
    rep.witness = {{"reason", "slope function is not continuous at the base point"},
                   {"a", G.to_json(a)}};
  }
  rep.passed = factor_ok && continuity_ok;
  return rep;
}

Homomorphism derivative_at(const SlopeFunction& s) { return s.slope_at(s.base()); }

VerificationReport uniqueness_probe(const SlopeFunction& s1, const SlopeFunction& s2,
                                    const GroupElement& z, std::uint64_t n_max,
                                    const ProbeSet& probe, const CheckOptions& opts) {
  const auto& G = s1.function().domain();
  if (G.id() != s2.function().domain().id() ||
      s1.function().codomain().id() != s2.function().codomain().id()) {
    throw ContractViolation("uniqueness probe: slopes map between different groups");
  }
  if (!same_point(G, s1.base(), s2.base())) {
    throw ContractViolation("uniqueness probe: slopes have different base points");
  }
  if (!G.traits().claims_divisible) {
    throw UnsupportedOperation("uniqueness probe needs a divisible domain, '" + G.id() +
                               "' is not");
  }
  if (n_max < 1) throw ContractViolation("n_max must be >= 1");
  const GroupElement& a = s1.base();
  const Homomorphism d1 = s1.slope_at(a);
  const Homomorphism d2 = s2.slope_at(a);
  const double at_base = hom_metric(d1, d2, probe, opts.exec);

  nlohmann::json seq = nlohmann::json::array();
  double tail1 = 0.0;
  double tail2 = 0.0;
  for (std::uint64_t n = 1; n <= n_max; n *= 2) {
    const GroupElement x = G.compose(G.nth_root(z, n), a);
    tail1 = hom_metric(s1.slope_at(x), d1, probe, opts.exec);
    tail2 = hom_metric(s2.slope_at(x), d2, probe, opts.exec);
    seq.push_back({{"n", n}, {"first", number_json(tail1)}, {"second", number_json(tail2)}});
    if (n > n_max / 2) break;
  }

  VerificationReport r;
  r.samples = probe.size();
  r.tolerance = opts.tol.limit;
  r.max_violation = std::max({at_base, tail1, tail2});
  r.passed = at_base < opts.tol.limit && tail1 < opts.tol.limit && tail2 < opts.tol.limit;
  r.details["metric_at_base"] = number_json(at_base);
  r.details["sequence"] = std::move(seq);
  r.details["slopes"] = {s1.label(), s2.label()};
  r.details["z"] = G.to_json(z);
  r.details["probe"] = probe.description();
  if (!r.passed) r.witness = {{"a", G.to_json(a)}, {"metric_at_base", number_json(at_base)}};
  return r;
}

VerificationReport continuity_from_differentiability(const GroupFunction& f,
                                                     const SlopeFunction& s,
                                                     const std::vector<double>& radii,
                                                     std::uint64_t seed, std::size_t count,
                                                     const CheckOptions& opts, double slack) {
  require_same_function(f, s);
  require_strictly_decreasing(radii);
  if (count == 0) throw ContractViolation("sample count must be >= 1");
  const auto& G = f.domain();
  const auto& H = f.codomain();
  const GroupElement& a = s.base();
  const GroupElement fa = f(a);

  std::vector<double> modulus;
  for (std::size_t k = 0; k < radii.size(); ++k) {
    const auto xs = sample_near(G, a, radii[k], derive_seed(seed, "radius-" + std::to_string(k)),
                                count);
    const Extremum m = max_over(opts.exec, xs.size(),
                                [&](std::size_t i) { return H.distance(f(xs[i]), fa); });
    modulus.push_back(m.value);
  }
  std::size_t breach = Extremum::npos;
  for (std::size_t k = 1; k < modulus.size() && breach == Extremum::npos; ++k) {
    if (modulus[k] > modulus[k - 1] + slack) breach = k;
  }

  VerificationReport r;
  r.samples = count * radii.size();
  r.tolerance = opts.tol.modulus;
  r.max_violation = modulus.back();
  r.passed = breach == Extremum::npos && modulus.back() < opts.tol.modulus;
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t k = 0; k < radii.size(); ++k) {
    rows.push_back({{"radius", radii[k]}, {"max_distance", number_json(modulus[k])}});
  }
  r.details["function"] = f.label();
  r.details["modulus"] = std::move(rows);
  r.details["slack"] = slack;
  if (breach != Extremum::npos) r.witness = {{"radius", radii[breach]}};
  return r;
}

SlopeFunction slope_sum(const SlopeFunction& s_f, const SlopeFunction& s_g) {
  const auto& G = s_f.function().domain();
  if (G.id() != s_g.function().domain().id() ||
      s_f.function().codomain().id() != s_g.function().codomain().id()) {
    throw ContractViolation("slope_sum: slopes map between different groups");
  }
  if (!same_point(G, s_f.base(), s_g.base())) {
    throw ContractViolation("slope_sum: slopes have different base points");
  }
  return SlopeFunction(
      function_sum(s_f.function(), s_g.function()), s_f.base(),
      std::min(s_f.radius(), s_g.radius()),
      [s_f, s_g](const GroupElement& x) { return oplus(s_f.slope_at(x), s_g.slope_at(x)); },
      "(" + s_f.label() + " (+) " + s_g.label() + ")");
}

SlopeFunction slope_scale(double alpha, const SlopeFunction& s_f) {
  return SlopeFunction(
      function_scale(alpha, s_f.function()), s_f.base(), s_f.radius(),
      [alpha, s_f](const GroupElement& x) { return scalar(alpha, s_f.slope_at(x)); },
      std::to_string(alpha) + "*" + s_f.label());
}

SlopeFunction slope_chain(const SlopeFunction& s_g, const SlopeFunction& s_f,
                          std::uint64_t seed, std::size_t count) {
  const GroupFunction& f = s_f.function();
  const GroupFunction& g = s_g.function();
  if (f.codomain().id() != g.domain().id()) {
    throw ContractViolation("slope_chain: codomain of '" + f.label() +
                            "' is not the domain of '" + g.label() + "'");
  }
  const auto& G = f.domain();
  const auto& H = f.codomain();
  const GroupElement fa = f(s_f.base());
  if (!same_point(H, s_g.base(), fa)) {
    throw ContractViolation("slope_chain: outer slope is not based at f(a)");
  }

  double radius = s_f.radius();
  bool found = false;
  for (int halvings = 0; halvings < 60 && !found; ++halvings) {
    const auto xs = sample_near(G, s_f.base(), radius, seed, count);
    double worst = 0.0;
    for (const auto& x : xs) worst = std::max(worst, H.distance(f(x), fa));
    if (worst < s_g.radius()) {
      found = true;
    } else {
      radius *= 0.5;
    }
  }
  if (!found) throw EstimationError("slope_chain: f does not map any ball into g's neighborhood");

  return SlopeFunction(
      function_compose(g, f), s_f.base(), radius,
      [s_g, s_f, f](const GroupElement& x) { return compose(s_g.slope_at(f(x)), s_f.slope_at(x)); },
      s_g.label() + " o " + s_f.label());
}

GroupElement frechet_fd_oracle(const GroupFunction& f, const GroupElement& a,
                               const GroupElement& y, double h) {
  if (!(h > 0.0)) throw ContractViolation("finite-difference step must be positive");
  const auto& G = f.domain();
  const auto& H = f.codomain();
  if (!G.has_scalar_action() || !H.has_scalar_action()) {
    throw UnsupportedOperation("finite-difference oracle needs scalar actions on '" + G.id() +
                               "' and '" + H.id() + "'");
  }
  const GroupElement shifted = G.compose(a, G.scale(h, y));
  return H.scale(1.0 / h, H.compose(f(shifted), H.inverse(f(a))));
}

}  // namespace mgd

namespace mgd {

VerificationReport check_factorization_pairs(
    const GroupFunction& f, const std::function<SlopeFunction(const GroupElement&)>& slope_for,
    const std::vector<std::pair<GroupElement, GroupElement>>& pairs, const CheckOptions& opts) {
  if (pairs.empty()) throw ContractViolation("need at least one (x, a) pair");
  const auto& G = f.domain();
  const auto& H = f.codomain();
  // Slopes are built up front; their construction may sample (slope_chain).
  std::vector<SlopeFunction> slopes;
  slopes.reserve(pairs.size());
  for (const auto& [x, a] : pairs) slopes.push_back(slope_for(a));

  const auto residual = map_indices(opts.exec, pairs.size(), [&](std::size_t i) {
    const auto& [x, a] = pairs[i];
    const GroupElement lhs = H.compose(f(x), H.inverse(f(a)));
    const GroupElement rhs = slopes[i].slope_at(x)(G.compose(x, G.inverse(a)));
    return H.distance(lhs, rhs);
  });
  const Extremum exc = max_over(opts.exec, pairs.size(), [&](std::size_t i) {
    const double allowed =
        opts.tol.fact + opts.tol.fact_rel * H.distance(f(pairs[i].first), H.identity());
    return residual[i] - allowed;
  });
  double worst = 0.0;
  for (double d : residual) worst = std::max(worst, d);

  VerificationReport r;
  r.samples = pairs.size();
  r.tolerance = opts.tol.fact;
  r.max_violation = worst;
  r.passed = exc.value <= 0.0;
  r.details["function"] = f.label();
  r.details["max_excess_over_allowed"] = number_json(exc.value);
  if (!r.passed) {
    r.witness = {{"x", G.to_json(pairs[exc.index].first)},
                 {"a", G.to_json(pairs[exc.index].second)},
                 {"residual", number_json(residual[exc.index])}};
  }
  return r;
}

}  // namespace mgd
