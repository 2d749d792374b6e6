#include "mgd/homspace.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <variant>

#include "mgd/errors.hpp"

namespace mgd {

struct Homomorphism::Node {
  struct Primitive {
    Map map;
    std::optional<double> lipschitz;
  };
  struct Sum {
    Homomorphism lhs;
    Homomorphism rhs;
  };
  struct Inverse {
    Homomorphism inner;
  };
  struct Composite {
    Homomorphism outer;
    Homomorphism inner;
  };
  struct Scaled {
    double alpha;
    Homomorphism inner;
  };
  std::variant<Primitive, Sum, Inverse, Composite, Scaled> body;
};

namespace {

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

void require_same_spaces(const Homomorphism& a, const Homomorphism& b, const char* what) {
  if (a.domain().id() != b.domain().id() || a.codomain().id() != b.codomain().id()) {
    throw ContractViolation(std::string(what) + ": homomorphisms live in different Hom spaces (" +
                            a.domain().id() + "->" + a.codomain().id() + " vs " +
                            b.domain().id() + "->" + b.codomain().id() + ")");
  }
}

std::string format_scalar(double a) {
  std::string s = std::to_string(a);
  while (s.size() > 1 && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

Homomorphism::Homomorphism(GroupPtr domain, GroupPtr codomain, std::string label,
                           std::shared_ptr<const Node> node)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      label_(std::move(label)),
      node_(std::move(node)) {
  if (!domain_ || !codomain_) throw ContractViolation("homomorphism needs domain and codomain");
}

Homomorphism Homomorphism::primitive(GroupPtr domain, GroupPtr codomain, Map map,
                                     std::string label, std::optional<double> lipschitz) {
  if (!map) throw ContractViolation("primitive homomorphism needs a map");
  auto node = std::make_shared<const Node>(Node{Node::Primitive{std::move(map), lipschitz}});
  return Homomorphism(std::move(domain), std::move(codomain), std::move(label), std::move(node));
}

Homomorphism Homomorphism::trivial(GroupPtr domain, GroupPtr codomain) {
  const GroupElement e = codomain->identity();
  return primitive(std::move(domain), std::move(codomain),
                   [e](const GroupElement&) { return e; }, "sigma", 0.0);
}

Homomorphism Homomorphism::identity(GroupPtr group) {
  GroupPtr same = group;
  return primitive(std::move(group), std::move(same), [](const GroupElement& x) { return x; },
                   "id", 1.0);
}

GroupElement Homomorphism::operator()(const GroupElement& x) const {
  domain_->require_member(x);
  return std::visit(
      overloaded{
          [&](const Node::Primitive& p) {
            GroupElement y = p.map(x);
            codomain_->require_member(y);
            return y;
          },
          [&](const Node::Sum& s) { return codomain_->compose(s.lhs(x), s.rhs(x)); },
          [&](const Node::Inverse& i) { return i.inner(domain_->inverse(x)); },
          [&](const Node::Composite& c) { return c.outer(c.inner(x)); },
          [&](const Node::Scaled& s) { return codomain_->scale(s.alpha, s.inner(x)); },
      },
      node_->body);
}

Homomorphism::Kind Homomorphism::kind() const {
  return static_cast<Kind>(node_->body.index());
}

std::optional<double> Homomorphism::lipschitz_hint() const {
  if (const auto* p = std::get_if<Node::Primitive>(&node_->body)) return p->lipschitz;
  return std::nullopt;
}

Homomorphism oplus(const Homomorphism& lhs, const Homomorphism& rhs) {
  require_same_spaces(lhs, rhs, "oplus");
  if (!lhs.codomain().traits().is_abelian) {
    throw ContractViolation("oplus needs an Abelian codomain, '" + lhs.codomain().id() +
                            "' is not flagged Abelian");
  }
  auto node = std::make_shared<const Homomorphism::Node>(
      Homomorphism::Node{Homomorphism::Node::Sum{lhs, rhs}});
  return Homomorphism(lhs.domain_, lhs.codomain_, "(" + lhs.label() + " (+) " + rhs.label() + ")",
                      std::move(node));
}

Homomorphism hom_inverse(const Homomorphism& h) {
  auto node = std::make_shared<const Homomorphism::Node>(
      Homomorphism::Node{Homomorphism::Node::Inverse{h}});
  return Homomorphism(h.domain_, h.codomain_, "inv(" + h.label() + ")", std::move(node));
}

Homomorphism compose(const Homomorphism& outer, const Homomorphism& inner) {
  if (outer.domain().id() != inner.codomain().id()) {
    throw ContractViolation("compose: outer domain '" + outer.domain().id() +
                            "' differs from inner codomain '" + inner.codomain().id() + "'");
  }
  auto node = std::make_shared<const Homomorphism::Node>(
      Homomorphism::Node{Homomorphism::Node::Composite{outer, inner}});
  return Homomorphism(inner.domain_, outer.codomain_, outer.label() + " o " + inner.label(),
                      std::move(node));
}

Homomorphism scalar(double alpha, const Homomorphism& h) {
  if (!h.codomain().has_scalar_action()) {
    throw UnsupportedOperation("scalar multiple needs a scalar action on '" + h.codomain().id() +
                               "'");
  }
  auto node = std::make_shared<const Homomorphism::Node>(
      Homomorphism::Node{Homomorphism::Node::Scaled{alpha, h}});
  return Homomorphism(h.domain_, h.codomain_, format_scalar(alpha) + "*" + h.label(),
                      std::move(node));
}

ProbeSet::ProbeSet(std::vector<GroupElement> points, std::string description)
    : points_(std::move(points)), description_(std::move(description)) {
  if (points_.empty()) throw ContractViolation("probe set must not be empty");
  for (const auto& p : points_) {
    if (p.group_id != points_.front().group_id) {
      throw ContractViolation("probe points belong to different groups");
    }
  }
}

ProbeSet ProbeSet::merged(const ProbeSet& other) const {
  if (other.group_id() != group_id()) {
    throw ContractViolation("cannot merge probe sets of different groups");
  }
  std::vector<GroupElement> pts = points_;
  pts.insert(pts.end(), other.points_.begin(), other.points_.end());
  return ProbeSet(std::move(pts), description_ + " + " + other.description_);
}

ProbeSet make_probe_set(const MetricGroupSpec& g, std::uint64_t seed, const ProbeOptions& opts) {
  if (opts.count == 0) throw ContractViolation("probe count must be >= 1");
  if (!(opts.min_scale > 0.0) || !(opts.max_scale >= opts.min_scale) || !(opts.scale > 0.0)) {
    throw ConfigurationError("probe scales must satisfy 0 < min_scale <= max_scale");
  }
  std::vector<double> distances;
  const bool with_neighborhood = opts.count >= 5;
  if (with_neighborhood) distances = {0.0, 1e-6, 1e-5, 1e-4};
  const std::size_t spread = opts.count - distances.size();
  const double log_lo = std::log(opts.min_scale);
  const double log_hi = std::log(opts.max_scale);
  for (std::size_t i = 0; i < spread; ++i) {
    const double f = spread == 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(spread - 1);
    distances.push_back(std::exp(log_lo + f * (log_hi - log_lo)));
  }

  const auto directions = g.sample(seed, opts.count * 2 + 8);
  std::vector<GroupElement> points;
  points.reserve(opts.count);
  std::size_t next = 0;
  for (double s : distances) {
    if (s == 0.0) {
      points.push_back(g.identity());
      continue;
    }
    const double target = s * opts.scale;
    for (; next < directions.size(); ++next) {
      const double du = g.distance(directions[next], g.identity());
      if (du > 0.0 && std::isfinite(du)) break;
    }
    if (next == directions.size()) throw EstimationError("probe directions were degenerate");
    const auto& u = directions[next++];
    points.push_back(g.real_power(u, target / g.distance(u, g.identity())));
  }
  return ProbeSet(std::move(points),
                  "probe(group=" + g.id() + ", seed=" + std::to_string(seed) +
                      ", count=" + std::to_string(opts.count) +
                      ", scales=[" + std::to_string(opts.min_scale) + ", " +
                      std::to_string(opts.max_scale) + "]x" + std::to_string(opts.scale) + ")");
}

double hom_metric(const Homomorphism& phi, const Homomorphism& psi, const ProbeSet& probe,
                  Exec exec) {
  require_same_spaces(phi, psi, "hom_metric");
  if (probe.group_id() != phi.domain().id()) {
    throw ContractViolation("probe set is not in the domain of the homomorphisms");
  }
  const auto pts = probe.points();
  const auto& h = phi.codomain();
  const Extremum m = max_over(exec, pts.size(), [&](std::size_t i) {
    const double d = h.distance(phi(pts[i]), psi(pts[i]));
    if (std::isinf(d)) return 1.0;
    return d / (1.0 + d);
  });
  return m.value;
}

VerificationReport check_homomorphism_law(const Homomorphism& h, std::uint64_t seed,
                                          std::size_t count, const CheckOptions& opts) {
  if (count == 0) throw ContractViolation("sample count must be >= 1");
  const auto& G = h.domain();
  const auto& H = h.codomain();
  const auto v = G.sample(seed, count + 1);
  const auto& eH = H.identity();
  const double at_identity = H.distance(h(G.identity()), eH);

  const Extremum m = max_over(opts.exec, count, [&](std::size_t i) {
    const auto hx = h(v[i]);
    const auto hy = h(v[i + 1]);
    const auto lhs = h(G.compose(v[i], v[i + 1]));
    const auto rhs = H.compose(hx, hy);
    const double scale =
        1.0 + H.distance(lhs, eH) + H.distance(hx, eH) + H.distance(hy, eH);
    return H.distance(lhs, rhs) / scale;
  });

  VerificationReport r;
  r.samples = count;
  r.tolerance = opts.tol.hom;
  r.max_violation = std::max(m.value, at_identity);
  r.passed = r.max_violation <= opts.tol.hom;
  r.details["homomorphism"] = h.label();
  r.details["identity_residual"] = number_json(at_identity);
  if (!r.passed) {
    if (at_identity > m.value) {
      r.witness = {{"x", G.to_json(G.identity())}};
    } else {
      r.witness = {{"x", G.to_json(v[m.index])}, {"y", G.to_json(v[m.index + 1])}};
    }
  }
  return r;
}

VerificationReport check_group_laws_on_hom(const Homomorphism& phi, const Homomorphism& psi,
                                           const Homomorphism& chi, const ProbeSet& probe,
                                           const CheckOptions& opts) {
  require_same_spaces(phi, psi, "group laws");
  require_same_spaces(phi, chi, "group laws");
  const Homomorphism sigma = Homomorphism::trivial(phi.domain_ptr(), phi.codomain_ptr());
  const Homomorphism assoc_l = oplus(oplus(phi, psi), chi);
  const Homomorphism assoc_r = oplus(phi, oplus(psi, chi));
  const Homomorphism comm_l = oplus(phi, psi);
  const Homomorphism comm_r = oplus(psi, phi);
  const Homomorphism neutral = oplus(phi, sigma);
  const Homomorphism cancel = oplus(phi, hom_inverse(phi));
  const auto& H = phi.codomain();
  const auto& eH = H.identity();
  const auto pts = probe.points();

  // Two reductions share the same per-point residuals: absolute and relative.
  auto residuals = [&](std::size_t i) {
    const auto& t = pts[i];
    const auto a = phi(t);
    const double mag = 1.0 + H.distance(a, eH) + H.distance(psi(t), eH) + H.distance(chi(t), eH);
    double worst = H.distance(assoc_l(t), assoc_r(t));
    worst = std::max(worst, H.distance(comm_l(t), comm_r(t)));
    worst = std::max(worst, H.distance(neutral(t), a));
    worst = std::max(worst, H.distance(cancel(t), eH));
    return std::pair{worst, worst / mag};
  };
  const Extremum rel = max_over(opts.exec, pts.size(), [&](std::size_t i) {
    return residuals(i).second;
  });
  const Extremum abs = max_over(opts.exec, pts.size(), [&](std::size_t i) {
    return residuals(i).first;
  });

  VerificationReport r;
  r.samples = pts.size();
  r.tolerance = opts.tol.fp;
  r.max_violation = rel.value;
  r.passed = rel.value <= opts.tol.fp;
  r.details["probe"] = probe.description();
  r.details["max_abs_residual"] = number_json(abs.value);
  r.details["homomorphisms"] = {phi.label(), psi.label(), chi.label()};
  if (!r.passed) r.witness = {{"t", phi.domain().to_json(pts[rel.index])}};
  return r;
}

VerificationReport check_hom_metric_properties(const Homomorphism& phi, const Homomorphism& psi,
                                               const Homomorphism& chi, const ProbeSet& probe,
                                               const ProbeSet& larger,
                                               const CheckOptions& opts) {
  if (larger.size() < probe.size()) {
    throw ContractViolation("enlarged probe set is smaller than the base probe set");
  }
  for (std::size_t i = 0; i < probe.size(); ++i) {
    if (!(probe.points()[i].payload == larger.points()[i].payload)) {
      throw ContractViolation("enlarged probe set does not start with the base probe set");
    }
  }
  const std::array<const Homomorphism*, 3> h = {&phi, &psi, &chi};
  double d[3][3];
  double wide[3][3];
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      d[i][j] = hom_metric(*h[i], *h[j], probe, opts.exec);
      wide[i][j] = hom_metric(*h[i], *h[j], larger, opts.exec);
    }
  }
  bool symmetric = true;
  bool in_range = true;
  bool monotone = true;
  double triangle = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      symmetric = symmetric && d[i][j] == d[j][i];
      in_range = in_range && d[i][j] >= 0.0 && d[i][j] < 1.0;
      monotone = monotone && wide[i][j] >= d[i][j];
      for (int k = 0; k < 3; ++k) triangle = std::max(triangle, d[i][k] - d[i][j] - d[j][k]);
    }
    in_range = in_range && d[i][i] == 0.0;
  }

  VerificationReport r;
  r.samples = probe.size();
  r.tolerance = opts.tol.fp;
  r.max_violation = triangle;
  r.passed = symmetric && in_range && monotone && triangle <= opts.tol.fp;
  r.details["symmetric"] = symmetric;
  r.details["in_unit_interval"] = in_range;
  r.details["monotone_under_enlargement"] = monotone;
  r.details["triangle_max_excess"] = number_json(triangle);
  r.details["d_phi_psi"] = number_json(d[0][1]);
  r.details["d_phi_chi"] = number_json(d[0][2]);
  r.details["d_psi_chi"] = number_json(d[1][2]);
  r.details["probe"] = probe.description();
  if (!r.passed) r.witness = {{"homomorphisms", {phi.label(), psi.label(), chi.label()}}};
  return r;
}

VerificationReport check_continuity_at_identity(const Homomorphism& h,
                                                const std::vector<double>& radii,
                                                std::uint64_t seed, std::size_t count,
                                                const CheckOptions& opts) {
  if (radii.empty() || count == 0) throw ContractViolation("need radii and samples");
  for (std::size_t i = 1; i < radii.size(); ++i) {
    if (!(radii[i] < radii[i - 1])) throw ContractViolation("radii must be strictly decreasing");
  }
  const auto& G = h.domain();
  const auto& H = h.codomain();
  std::vector<double> modulus;
  double lipschitz_excess = -std::numeric_limits<double>::infinity();
  const auto hint = h.lipschitz_hint();
  for (std::size_t k = 0; k < radii.size(); ++k) {
    const auto xs = sample_near(G, G.identity(), radii[k], derive_seed(seed, std::to_string(k)),
                                count);
    const Extremum m = max_over(opts.exec, xs.size(), [&](std::size_t i) {
      return H.distance(h(xs[i]), H.identity());
    });
    modulus.push_back(m.value);
    if (hint) lipschitz_excess = std::max(lipschitz_excess, m.value - *hint * radii[k]);
  }
  bool nonincreasing = true;
  for (std::size_t k = 1; k < modulus.size(); ++k) {
    nonincreasing = nonincreasing && modulus[k] <= modulus[k - 1] + opts.tol.fp;
  }
  const bool within_hint = !hint || lipschitz_excess <= opts.tol.fp;

  VerificationReport r;
  r.samples = count * radii.size();
  r.tolerance = opts.tol.limit;
  r.max_violation = modulus.back();
  r.passed = nonincreasing && within_hint && modulus.back() < opts.tol.limit;
  nlohmann::json profile = nlohmann::json::array();
  for (std::size_t k = 0; k < radii.size(); ++k) {
    profile.push_back({{"radius", radii[k]}, {"max_distance", number_json(modulus[k])}});
  }
  r.details["homomorphism"] = h.label();
  r.details["profile"] = std::move(profile);
  r.details["nonincreasing"] = nonincreasing;
  if (hint) r.details["lipschitz_hint"] = *hint;
  return r;
}

VerificationReport pointwise_to_metric_convergence_probe(const std::vector<Homomorphism>& sequence,
                                                         const Homomorphism& limit,
                                                         const ProbeSet& probe,
                                                         const CheckOptions& opts) {
  if (sequence.empty()) throw ContractViolation("convergence probe needs a nonempty sequence");
  std::vector<double> dist;
  dist.reserve(sequence.size());
  for (const auto& h : sequence) dist.push_back(hom_metric(h, limit, probe, opts.exec));

  std::size_t breach = Extremum::npos;
  for (std::size_t i = dist.size() / 2 + 1; i < dist.size() && breach == Extremum::npos; ++i) {
    if (dist[i] > dist[i - 1] + opts.tol.fp) breach = i;
  }

  VerificationReport r;
  r.samples = sequence.size();
  r.tolerance = opts.tol.limit;
  r.max_violation = dist.back();
  r.passed = breach == Extremum::npos && dist.back() < opts.tol.limit;
  nlohmann::json seq = nlohmann::json::array();
  for (double d : dist) seq.push_back(number_json(d));
  r.details["distances"] = std::move(seq);
  r.details["limit"] = limit.label();
  r.details["probe"] = probe.description();
  if (breach != Extremum::npos) {
    r.witness = {{"index", breach}, {"homomorphism", sequence[breach].label()}};
  }
  return r;
}

}  // namespace mgd

namespace mgd {

VerificationReport check_hom_agreement(const Homomorphism& actual,
                                       const std::function<GroupElement(const GroupElement&)>& expected,
                                       const ProbeSet& probe, const CheckOptions& opts) {
  if (probe.group_id() != actual.domain().id()) {
    throw ContractViolation("probe set is not in the domain of '" + actual.label() + "'");
  }
  const auto& H = actual.codomain();
  const auto pts = probe.points();
  const auto abs_res = map_indices(opts.exec, pts.size(), [&](std::size_t i) {
    return H.distance(actual(pts[i]), expected(pts[i]));
  });
  const Extremum rel = max_over(opts.exec, pts.size(), [&](std::size_t i) {
    return abs_res[i] / (1.0 + H.distance(expected(pts[i]), H.identity()));
  });
  double max_abs = 0.0;
  for (double d : abs_res) max_abs = std::max(max_abs, d);

  VerificationReport r;
  r.samples = pts.size();
  r.tolerance = opts.tol.fp;
  r.max_violation = rel.value;
  r.passed = rel.value <= opts.tol.fp;
  r.details["homomorphism"] = actual.label();
  r.details["max_abs_residual"] = number_json(max_abs);
  r.details["probe"] = probe.description();
  if (!r.passed) r.witness = {{"t", actual.domain().to_json(pts[rel.index])}};
  return r;
}

}  // namespace mgd
