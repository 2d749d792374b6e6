#include "mgd/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "mgd/axioms.hpp"
#include "mgd/catalog.hpp"
#include "mgd/derivative.hpp"
#include "mgd/errors.hpp"
#include "mgd/groups.hpp"
#include "mgd/homspace.hpp"

namespace mgd {

namespace {

using Run = std::function<VerificationReport(std::uint64_t)>;

constexpr std::uint64_t kRootLimitN = 1024;
constexpr std::uint64_t kUniquenessN = std::uint64_t{1} << 16;
constexpr std::size_t kMetricTriples = 100;
constexpr std::size_t kConvergenceSteps = 17;
constexpr double kCounterexampleGap = 0.1;
constexpr std::array<double, 3> kFdSteps = {1e-1, 1e-2, 1e-3};
constexpr std::array<double, 4> kScales = {0.0, 1.0, 2.0, -3.5};

VerificationReport combine(const std::vector<VerificationReport>& parts) {
  VerificationReport r;
  r.passed = true;
  r.max_violation = -std::numeric_limits<double>::infinity();
  nlohmann::json sub = nlohmann::json::array();
  for (const auto& p : parts) {
    r.samples += p.samples;
    r.skipped += p.skipped;
    r.tolerance = p.tolerance;
    r.max_violation = std::max(r.max_violation, p.max_violation);
    if (!p.passed && r.passed) r.witness = p.witness;
    r.passed = r.passed && p.passed;
    sub.push_back({{"passed", p.passed},
                   {"max_violation", number_json(p.max_violation)},
                   {"details", p.details}});
  }
  r.details["parts"] = std::move(sub);
  return r;
}

GroupElement unit_base(const MetricGroupSpec& g, std::uint64_t seed) {
  for (std::uint64_t k = 0;; ++k) {
    const auto u = g.sample(derive_seed(seed, std::to_string(k)), 1).front();
    const double d = g.distance(u, g.identity());
    if (d > 1e-3) return g.real_power(u, 1.0 / d);
  }
}

GroupElement uniform_matrix(const MetricGroupSpec& g, std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> a(n * n);
  for (double& v : a) v = u(rng);
  return g.element(Matrix(n, std::move(a)));
}

std::vector<std::pair<GroupElement, GroupElement>> uniform_matrix_pairs(const MetricGroupSpec& g,
                                                                        std::uint64_t seed,
                                                                        std::size_t count) {
  const std::size_t n = matrix_of(g.identity()).dim();
  std::mt19937_64 rng(seed);
  std::vector<std::pair<GroupElement, GroupElement>> pairs;
  pairs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    GroupElement x = uniform_matrix(g, n, rng);
    GroupElement a = uniform_matrix(g, n, rng);
    pairs.emplace_back(std::move(x), std::move(a));
  }
  return pairs;
}

std::vector<std::pair<GroupElement, GroupElement>> sampled_pairs(const MetricGroupSpec& g,
                                                                 std::uint64_t seed,
                                                                 std::size_t count) {
  const auto v = g.sample(seed, 2 * count);
  std::vector<std::pair<GroupElement, GroupElement>> pairs;
  pairs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) pairs.emplace_back(v[2 * i], v[2 * i + 1]);
  return pairs;
}

Matrix sylvester_value(const Matrix& a, const Matrix& y) { return a * y + y * a; }

Homomorphism random_linear_hom(const GroupPtr& g, std::uint64_t seed) {
  const auto v = g->sample(seed, 2);
  if (g->id() == "real-add") return cases::linear_real(g, real_of(v[0]));
  return cases::sylvester(g, matrix_of(v[0]), matrix_of(v[1]), "BY+YC#" + std::to_string(seed % 1000));
}

GroupElement root_limit_point(const MetricGroupSpec& g) {
  if (g.id() == "real-add") return g.element(1.0);
  if (g.id() == "pos-real-mul") return g.element(8.0);
  if (g.id() == "circle") return g.element(std::numbers::pi / 2.0);
  return g.element(Matrix::identity(matrix_of(g.identity()).dim()));
}

/// Slope of X^4 = (X^2)^2 at a, from two squaring slopes.
SlopeFunction quartic_slope(const GroupFunction& square, const GroupElement& a, std::uint64_t seed) {
  const SlopeFunction inner = cases::square_slope_right(square, a);
  const SlopeFunction outer = cases::square_slope_right(square, square(a));
  return slope_chain(outer, inner, seed);
}

SlopeFunction ninth_power_slope(const GroupFunction& cube, const GroupElement& a, std::uint64_t seed) {
  const SlopeFunction inner = cases::cube_slope_power(cube, a);
  const SlopeFunction outer = cases::cube_slope_power(cube, cube(a));
  return slope_chain(outer, inner, seed);
}

class Builder {
 public:
  explicit Builder(const SuiteConfig& cfg) : cfg_(cfg) {
    opts_.tol = cfg.tol;
    opts_.probe = cfg.probe;
    opts_.exec = cfg.exec;
    const auto& names = cfg.groups.empty() ? default_group_names() : cfg.groups;
    for (const auto& name : names) {
      GroupPtr g = make_group(name);
      if (std::none_of(groups_.begin(), groups_.end(),
                       [&](const GroupPtr& h) { return h->id() == g->id(); })) {
        groups_.push_back(std::move(g));
      }
    }
  }

  std::vector<CheckDescriptor> build() {
    axioms();
    homspace();
    derivative();
    theorems();
    return std::move(out_);
  }

 private:
  void add(std::string id, const char* suite, std::string anchor, std::string description,
           std::vector<std::string> tols, Run run) {
    out_.push_back({std::move(id), suite, std::move(anchor), std::move(description),
                    std::move(tols), std::move(run)});
  }

  GroupPtr group(std::string_view id) const {
    for (const auto& g : groups_) {
      if (g->id() == id) return g;
    }
    return nullptr;
  }
  GroupPtr matrix_group() const {
    for (const auto& g : groups_) {
      if (g->id().starts_with("matrix-add:")) return g;
    }
    return nullptr;
  }
  std::size_t case_count() const { return std::max<std::size_t>(1, cfg_.samples / 10); }

  void axioms() {
    const std::size_t n = cfg_.samples;
    for (const auto& g : groups_) {
      const std::string& gid = g->id();
      const CheckOptions o = opts_;
      add("axioms.metric." + gid, "axioms", "metric-space axioms",
          "symmetry, d(x,x)=0, nonnegativity and triangle inequality on sampled triples", {"fp"},
          [g, n, o](std::uint64_t s) { return check_metric_axioms(*g, s, n, o); });
      add("axioms.group." + gid, "axioms", "group axioms",
          "associativity, identity, inverse (and commutativity when Abelian)", {"fp"},
          [g, n, o](std::uint64_t s) { return check_group_axioms(*g, s, n, o); });
      if (g->traits().claims_group_metric) {
        add("axioms.product-bound." + gid, "axioms",
            "group metric: d(xy,e) <= d(x,e)d(y,e) + d(x,e) + d(y,e)",
            "product bound of a group metric on sampled pairs", {"fp"},
            [g, n, o](std::uint64_t s) { return check_group_metric_axiom1(*g, s, n, o); });
        add("axioms.translation." + gid, "axioms", "group metric: d(xk,yk) <= c_k d(x,y)",
            "right-translation constant for a sampled k", {"fp"},
            [g, n, o](std::uint64_t s) {
              const auto k = g->sample(derive_seed(s, "k"), 1).front();
              return check_translation_constant(*g, k, s, n, o);
            });
      }
      if (g->traits().claims_divisible) {
        add("axioms.root-roundtrip." + gid, "axioms", "divisible group: unique n-th roots",
            "n-fold power of nth_root(g, n) recovers g for n <= 64", {"root"},
            [g, n, o](std::uint64_t s) { return check_nth_root_roundtrip(*g, s, n, 64, o); });
        add("axioms.root-limit." + gid, "axioms", "divisible group: x^(1/n) -> e",
            "d(x^(1/n), e) strictly decreasing in n and small at n = 1024", {"limit"},
            [g, o](std::uint64_t) {
              return check_root_limit(*g, root_limit_point(*g), kRootLimitN, o);
            });
      }
    }
  }

  void homspace() {
    const std::size_t n = case_count();
    const CheckOptions o = opts_;
    const auto radii = cfg_.radii;
    for (const auto& g : groups_) {
      const std::string& gid = g->id();
      const bool linear = gid == "real-add" || gid.starts_with("matrix-add:");
      if (!linear && gid != "circle") continue;
      // Three homomorphisms per check: random linear ones, or t^2, t^3, t^5 on the circle.
      auto homs = [g, linear](std::uint64_t s) {
        if (!linear) {
          return std::array<Homomorphism, 3>{cases::power_map(g, 2), cases::power_map(g, 3),
                                             cases::power_map(g, 5)};
        }
        return std::array<Homomorphism, 3>{random_linear_hom(g, derive_seed(s, "phi")),
                                           random_linear_hom(g, derive_seed(s, "psi")),
                                           random_linear_hom(g, derive_seed(s, "chi"))};
      };
      add("homspace.hom-law." + gid, "homspace", "Hom(G;H): homomorphism law",
          "h(xy) = h(x)h(y) and h(e) = e for a generated homomorphism", {"hom"},
          [homs, n, o](std::uint64_t s) { return check_homomorphism_law(homs(s)[0], s, n, o); });
      add("homspace.oplus-closure." + gid, "homspace", "Hom(G;H): pointwise sum is closed",
          "oplus, inverse and composition of homomorphisms are homomorphisms", {"hom"},
          [homs, n, o](std::uint64_t s) {
            const auto h = homs(s);
            return combine({check_homomorphism_law(oplus(h[0], h[1]), s, n, o),
                            check_homomorphism_law(hom_inverse(h[0]), s, n, o),
                            check_homomorphism_law(compose(h[0], h[1]), s, n, o)});
          });
      add("homspace.group-laws." + gid, "homspace", "Hom(G;H): Abelian group under oplus",
          "associativity, commutativity, sigma neutrality and inverse law on the probe set",
          {"fp"}, [g, homs, o](std::uint64_t s) {
            const auto h = homs(s);
            return check_group_laws_on_hom(h[0], h[1], h[2],
                                           make_probe_set(*g, derive_seed(s, "probe"), o.probe), o);
          });
      add("homspace.continuity." + gid, "homspace", "Hom(G;H): continuity at the identity",
          "radius sweep of d(h(x), e) around e", {"fp", "limit"},
          [homs, radii, o](std::uint64_t s) {
            return check_continuity_at_identity(homs(s)[0], radii, s, 64, o);
          });
      if (!linear) continue;
      add("homspace.metric." + gid, "homspace", "Hom(G;H): bounded sup metric",
          "symmetry, triangle inequality, range [0,1) and probe monotonicity on 100 triples",
          {"fp"}, [g, homs, o](std::uint64_t s) {
            const ProbeSet probe = make_probe_set(*g, derive_seed(s, "probe"), o.probe);
            const ProbeSet larger =
                probe.merged(make_probe_set(*g, derive_seed(s, "probe-extra"), o.probe));
            CheckOptions strict = o;
            strict.tol.fp = 1e-12;
            std::vector<VerificationReport> parts;
            for (std::size_t i = 0; i < kMetricTriples; ++i) {
              const auto h = homs(derive_seed(s, "triple-" + std::to_string(i)));
              parts.push_back(check_hom_metric_properties(h[0], h[1], h[2], probe, larger, strict));
            }
            return combine(parts);
          });
      add("homspace.convergence." + gid, "homspace",
          "Hom(G;H): pointwise convergence gives metric convergence",
          "hom_metric along a pointwise-convergent sequence of homomorphisms", {"fp", "limit"},
          [g, o](std::uint64_t s) {
            const ProbeSet probe = make_probe_set(*g, derive_seed(s, "probe"), o.probe);
            std::vector<Homomorphism> seq;
            if (g->id() == "real-add") {
              for (std::size_t k = 0; k < kConvergenceSteps; ++k) {
                seq.push_back(cases::linear_real(g, 1.0 + std::ldexp(1.0, -static_cast<int>(k))));
              }
              return pointwise_to_metric_convergence_probe(seq, cases::linear_real(g, 1.0), probe, o);
            }
            const GroupFunction sq = cases::square_matrix(g);
            const GroupElement a = unit_base(*g, derive_seed(s, "base"));
            const SlopeFunction slope = cases::square_slope_right(sq, a);
            const GroupElement u = unit_base(*g, derive_seed(s, "direction"));
            for (std::size_t k = 0; k < kConvergenceSteps; ++k) {
              const double t = std::ldexp(1.0, -static_cast<int>(k));
              seq.push_back(slope.slope_at(g->compose(g->scale(t, u), a)));
            }
            return pointwise_to_metric_convergence_probe(seq, derivative_at(slope), probe, o);
          });
    }
  }

  void derivative() {
    const std::size_t n = case_count();
    const CheckOptions o = opts_;
    const auto radii = cfg_.radii;
    if (GroupPtr m = matrix_group()) {
      const std::string mid = m->id();
      const GroupFunction sq = cases::square_matrix(m);
      for (const char* variant : {"right", "left"}) {
        const bool right = std::string_view(variant) == "right";
        add("derivative.factorization.square-matrix." + std::string(variant), "derivative",
            "differentiability: f(x)f(a)^-1 = phi(x)[xa^-1]",
            std::string("X^2 with slope ") + (right ? "AY+YX" : "XY+YA") +
                ", residual and slope continuity over the radius sweep",
            {"fact", "fact_rel", "limit"}, [m, sq, right, radii, n, o](std::uint64_t s) {
              const GroupElement a = unit_base(*m, derive_seed(s, "base"));
              const SlopeFunction slope =
                  right ? cases::square_slope_right(sq, a) : cases::square_slope_left(sq, a);
              return check_differentiable(sq, slope, radii, s, n, o).to_report();
            });
      }
      add("derivative.pairs.square-matrix", "derivative",
          "differentiability: f(x)f(a)^-1 = phi(x)[xa^-1]",
          "X^2 - A^2 = A(X-A) + (X-A)X on random pairs with entries in [-1, 1]",
          {"fact", "fact_rel"}, [m, sq, n, o](std::uint64_t s) {
            return check_factorization_pairs(
                sq, [&](const GroupElement& a) { return cases::square_slope_right(sq, a); },
                uniform_matrix_pairs(*m, s, n), o);
          });
      add("derivative.value.square-matrix", "derivative", "derivative is phi(a)",
          "derivative of X^2 at A evaluates to AY+YA, and to 2Y at A = I", {"fp"},
          [m, sq, o](std::uint64_t s) {
            const ProbeSet probe = make_probe_set(*m, derive_seed(s, "probe"), o.probe);
            const GroupElement a = unit_base(*m, derive_seed(s, "base"));
            const Matrix A = matrix_of(a);
            const GroupElement id = m->element(Matrix::identity(A.dim()));
            return combine(
                {check_hom_agreement(
                     derivative_at(cases::square_slope_right(sq, a)),
                     [&](const GroupElement& y) { return m->element(sylvester_value(A, matrix_of(y))); },
                     probe, o),
                 check_hom_agreement(
                     derivative_at(cases::square_slope_right(sq, id)),
                     [&](const GroupElement& y) { return m->scale(2.0, y); }, probe, o)});
          });
      add("derivative.fd-oracle.square-matrix", "derivative", "derivative equals the Frechet derivative",
          "||(f(A+hY)-f(A))/h - (AY+YA)|| / h equals ||Y^2|| for h in {1e-1, 1e-2, 1e-3}",
          {"fp"}, [m, sq, o](std::uint64_t s) {
            const GroupElement a = unit_base(*m, derive_seed(s, "base"));
            const Matrix A = matrix_of(a);
            std::mt19937_64 rng(derive_seed(s, "directions"));
            VerificationReport r;
            r.tolerance = o.tol.fp;
            r.max_violation = 0.0;
            nlohmann::json rows = nlohmann::json::array();
            for (int k = 0; k < 8; ++k) {
              const GroupElement y = uniform_matrix(*m, A.dim(), rng);
              const Matrix& Y = matrix_of(y);
              const double y2 = (Y * Y).norm();
              if (y2 < 0.05) {
                ++r.skipped;
                continue;
              }
              for (double h : kFdSteps) {
                const Matrix q = matrix_of(frechet_fd_oracle(sq, a, y, h));
                const double ratio = (q - sylvester_value(A, Y)).norm() / h;
                const double rel = std::abs(ratio - y2) / y2;
                r.max_violation = std::max(r.max_violation, rel);
                ++r.samples;
                rows.push_back({{"h", h}, {"ratio", ratio}, {"norm_y_squared", y2}});
              }
            }
            r.passed = r.samples > 0 && r.max_violation <= o.tol.fp;
            r.details["evaluations"] = std::move(rows);
            return r;
          });
    }
    if (GroupPtr c = group("circle")) {
      const GroupFunction cube = cases::cube(c);
      for (const char* variant : {"power", "adjoint"}) {
        const bool power = std::string_view(variant) == "power";
        add("derivative.factorization.cube-circle." + std::string(variant), "derivative",
            "differentiability: f(x)f(a)^-1 = phi(x)[xa^-1]",
            std::string("x^3 on the circle with slope ") + (power ? "t^3" : "t*ad_a(t*ad_a(t))"),
            {"fact", "fact_rel", "limit"}, [c, cube, power, radii, n, o](std::uint64_t s) {
              const GroupElement a = c->sample(derive_seed(s, "base"), 1).front();
              const SlopeFunction slope =
                  power ? cases::cube_slope_power(cube, a) : cases::cube_slope_adjoint(cube, a);
              return check_differentiable(cube, slope, radii, s, n, o).to_report();
            });
      }
      add("derivative.pairs.cube-circle", "derivative",
          "differentiability: f(x)f(a)^-1 = phi(x)[xa^-1]",
          "x^3 a^-3 = (x a^-1)^3 on random circle pairs", {"fact", "fact_rel"},
          [c, cube, n, o](std::uint64_t s) {
            return check_factorization_pairs(
                cube, [&](const GroupElement& a) { return cases::cube_slope_power(cube, a); },
                sampled_pairs(*c, s, n), o);
          });
      add("derivative.adjoint-form.cube-circle", "derivative", "derivative is phi(a)",
          "the ad_a form of the cubing slope agrees with t^3 pointwise", {"fp"},
          [c, cube, o](std::uint64_t s) {
            const ProbeSet probe = make_probe_set(*c, derive_seed(s, "probe"), o.probe);
            std::vector<VerificationReport> parts;
            for (const auto& a : c->sample(derive_seed(s, "bases"), 16)) {
              const Homomorphism power = derivative_at(cases::cube_slope_power(cube, a));
              parts.push_back(check_hom_agreement(derivative_at(cases::cube_slope_adjoint(cube, a)),
                                                  [&](const GroupElement& t) { return power(t); },
                                                  probe, o));
            }
            return combine(parts);
          });
    }
    if (GroupPtr r = group("real-add")) {
      add("derivative.factorization.const.real-add", "derivative",
          "differentiability: f(x)f(a)^-1 = phi(x)[xa^-1]", "constant function with slope sigma",
          {"fact", "fact_rel", "limit"}, [r, radii, n, o](std::uint64_t s) {
            const GroupFunction f = cases::constant(r, r);
            const GroupElement a = r->sample(derive_seed(s, "base"), 1).front();
            return check_differentiable(f, cases::constant_slope(f, a), radii, s, n, o).to_report();
          });
      add("derivative.factorization.identity.real-add", "derivative",
          "differentiability: f(x)f(a)^-1 = phi(x)[xa^-1]",
          "identity function with the identity homomorphism as slope",
          {"fact", "fact_rel", "limit"}, [r, radii, n, o](std::uint64_t s) {
            const GroupFunction f = cases::identity(r);
            const GroupElement a = r->sample(derive_seed(s, "base"), 1).front();
            return check_differentiable(f, cases::identity_slope(f, a), radii, s, n, o).to_report();
          });
    }
  }

  void theorems() {
    const std::size_t n = case_count();
    const CheckOptions o = opts_;
    const auto radii = cfg_.radii;
    using CaseFactory = std::function<std::pair<GroupFunction, SlopeFunction>(std::uint64_t)>;
    std::vector<std::pair<std::string, CaseFactory>> continuity_cases;

    if (GroupPtr m = matrix_group()) {
      const GroupFunction sq = cases::square_matrix(m);
      auto base = [m](std::uint64_t s) { return unit_base(*m, derive_seed(s, "base")); };
      continuity_cases.emplace_back("square-matrix", [sq, base](std::uint64_t s) {
        return std::pair{sq, cases::square_slope_right(sq, base(s))};
      });
      continuity_cases.emplace_back("sum.square-matrix", [sq, base](std::uint64_t s) {
        const SlopeFunction sf = cases::square_slope_right(sq, base(s));
        const SlopeFunction sum = slope_sum(sf, sf);
        return std::pair{sum.function(), sum};
      });
      continuity_cases.emplace_back("scale.square-matrix", [sq, base](std::uint64_t s) {
        const SlopeFunction scaled = slope_scale(-3.5, cases::square_slope_right(sq, base(s)));
        return std::pair{scaled.function(), scaled};
      });
      continuity_cases.emplace_back("chain.square-matrix", [sq, base](std::uint64_t s) {
        const SlopeFunction q = quartic_slope(sq, base(s), s);
        return std::pair{q.function(), q};
      });

      add("theorems.sum.square-matrix", "theorems", "derivative of a sum is the oplus of derivatives",
          "X^2 + X^2: combined slope factors 2X^2 and its derivative is 2(AY+YA)",
          {"fact", "fact_rel", "fp", "limit"}, [m, sq, base, radii, n, o](std::uint64_t s) {
            const GroupElement a = base(s);
            const Matrix A = matrix_of(a);
            const SlopeFunction sf = cases::square_slope_right(sq, a);
            const SlopeFunction sum = slope_sum(sf, sf);
            const ProbeSet probe = make_probe_set(*m, derive_seed(s, "probe"), o.probe);
            const Homomorphism d = derivative_at(sf);
            return combine(
                {check_differentiable(sum.function(), sum, radii, s, n, o).to_report(),
                 check_hom_agreement(
                     derivative_at(sum),
                     [&](const GroupElement& y) {
                       return m->element(2.0 * sylvester_value(A, matrix_of(y)));
                     },
                     probe, o),
                 check_hom_agreement(
                     derivative_at(sum), [&](const GroupElement& y) { return m->compose(d(y), d(y)); },
                     probe, o)});
          });
      for (double alpha : kScales) {
        std::ostringstream id;
        id << "theorems.scale.square-matrix.alpha=" << alpha;
        add(id.str(), "theorems", "derivative of a scalar multiple",
            "alpha X^2: scaled slope factors alpha f and evaluates to alpha(AY+YA)",
            {"fact", "fact_rel", "fp", "limit"}, [m, sq, base, alpha, radii, n, o](std::uint64_t s) {
              const GroupElement a = base(s);
              const Matrix A = matrix_of(a);
              const SlopeFunction scaled = slope_scale(alpha, cases::square_slope_right(sq, a));
              const ProbeSet probe = make_probe_set(*m, derive_seed(s, "probe"), o.probe);
              return combine(
                  {check_differentiable(scaled.function(), scaled, radii, s, n, o).to_report(),
                   check_factorization_pairs(
                       scaled.function(),
                       [&](const GroupElement& b) {
                         return slope_scale(alpha, cases::square_slope_right(sq, b));
                       },
                       uniform_matrix_pairs(*m, derive_seed(s, "pairs"), n), o),
                   check_hom_agreement(
                       derivative_at(scaled),
                       [&](const GroupElement& y) {
                         return m->element(alpha * sylvester_value(A, matrix_of(y)));
                       },
                       probe, o)});
            });
      }
      add("theorems.chain.square-matrix", "theorems", "chain rule",
          "X^4 = (X^2)^2: composed slope factors X^4 and its derivative is "
          "A^2(AY+YA) + (AY+YA)A^2",
          {"fact", "fact_rel", "fp", "limit"}, [m, sq, base, radii, n, o](std::uint64_t s) {
            const GroupElement a = base(s);
            const Matrix A = matrix_of(a);
            const Matrix A2 = A * A;
            const SlopeFunction q = quartic_slope(sq, a, s);
            const SlopeFunction inner = cases::square_slope_right(sq, a);
            const SlopeFunction outer = cases::square_slope_right(sq, sq(a));
            const ProbeSet probe = make_probe_set(*m, derive_seed(s, "probe"), o.probe);
            const GroupFunction quartic = q.function();
            return combine(
                {check_differentiable(quartic, q, radii, s, n, o).to_report(),
                 check_factorization_pairs(
                     quartic, [&](const GroupElement& b) { return quartic_slope(sq, b, s); },
                     uniform_matrix_pairs(*m, derive_seed(s, "pairs"), n), o),
                 check_hom_agreement(
                     derivative_at(q),
                     [&](const GroupElement& y) {
                       const Matrix d = sylvester_value(A, matrix_of(y));
                       return m->element(A2 * d + d * A2);
                     },
                     probe, o),
                 check_hom_agreement(
                     derivative_at(q),
                     [&](const GroupElement& y) {
                       return derivative_at(outer)(derivative_at(inner)(y));
                     },
                     probe, o)});
          });
      add("theorems.uniqueness.square-matrix.variants", "theorems", "uniqueness of the derivative",
          "AY+YX and XY+YA slopes converge along z^(1/n)A and agree at A", {"limit"},
          [m, sq, base, o](std::uint64_t s) {
            const GroupElement a = base(s);
            const ProbeSet probe = make_probe_set(*m, derive_seed(s, "probe"), o.probe);
            const GroupElement z = unit_base(*m, derive_seed(s, "z"));
            return uniqueness_probe(cases::square_slope_right(sq, a), cases::square_slope_left(sq, a),
                                    z, kUniquenessN, probe, o);
          });
      add("theorems.uniqueness.square-matrix.perturbed", "theorems", "uniqueness of the derivative",
          "a slope altered only at A is rejected: hom_metric at A exceeds 0.1", {"limit"},
          [m, sq, base, o](std::uint64_t s) {
            const GroupElement a = base(s);
            const ProbeSet probe = make_probe_set(*m, derive_seed(s, "probe"), o.probe);
            const GroupElement z = unit_base(*m, derive_seed(s, "z"));
            VerificationReport probe_report =
                uniqueness_probe(cases::square_slope_right(sq, a),
                                 cases::square_slope_perturbed(sq, a), z, kUniquenessN, probe, o);
            const double gap = probe_report.details["metric_at_base"].get<double>();
            VerificationReport r;
            r.samples = probe_report.samples;
            r.tolerance = kCounterexampleGap;
            r.max_violation = gap;
            r.passed = !probe_report.passed && gap > kCounterexampleGap;
            r.details = probe_report.details;
            r.details["probe_rejected_counterexample"] = !probe_report.passed;
            if (!r.passed) r.witness = {{"metric_at_base", gap}};
            return r;
          });
    }

    if (GroupPtr c = group("circle")) {
      const GroupFunction cube = cases::cube(c);
      auto base = [c](std::uint64_t s) { return c->sample(derive_seed(s, "base"), 1).front(); };
      continuity_cases.emplace_back("cube-circle", [cube, base](std::uint64_t s) {
        return std::pair{cube, cases::cube_slope_power(cube, base(s))};
      });
      continuity_cases.emplace_back("chain.cube-circle", [cube, base](std::uint64_t s) {
        const SlopeFunction nine = ninth_power_slope(cube, base(s), s);
        return std::pair{nine.function(), nine};
      });
      add("theorems.chain.cube-circle", "theorems", "chain rule",
          "x^9 = (x^3)^3 on the circle: composed slope factors x^9 and is t^9",
          {"fact", "fact_rel", "fp", "limit"}, [c, cube, base, radii, n, o](std::uint64_t s) {
            const SlopeFunction nine = ninth_power_slope(cube, base(s), s);
            const ProbeSet probe = make_probe_set(*c, derive_seed(s, "probe"), o.probe);
            const GroupFunction f9 = nine.function();
            return combine(
                {check_differentiable(f9, nine, radii, s, n, o).to_report(),
                 check_factorization_pairs(
                     f9, [&](const GroupElement& b) { return ninth_power_slope(cube, b, s); },
                     sampled_pairs(*c, derive_seed(s, "pairs"), n), o),
                 check_hom_agreement(derivative_at(nine),
                                     [&](const GroupElement& t) { return c->power(t, 9); }, probe,
                                     o)});
          });
      add("theorems.uniqueness.cube-circle", "theorems", "uniqueness of the derivative",
          "power and ad_a forms of the cubing slope agree at a", {"limit"},
          [c, cube, base, o](std::uint64_t s) {
            const GroupElement a = base(s);
            const ProbeSet probe = make_probe_set(*c, derive_seed(s, "probe"), o.probe);
            const GroupElement z = c->sample(derive_seed(s, "z"), 1).front();
            return uniqueness_probe(cases::cube_slope_power(cube, a),
                                    cases::cube_slope_adjoint(cube, a), z, kUniquenessN, probe, o);
          });
    }

    if (GroupPtr r = group("real-add")) {
      auto base = [r](std::uint64_t s) { return r->sample(derive_seed(s, "base"), 1).front(); };
      continuity_cases.emplace_back("const.real-add", [r, base](std::uint64_t s) {
        const GroupFunction f = cases::constant(r, r);
        return std::pair{f, cases::constant_slope(f, base(s))};
      });
      continuity_cases.emplace_back("identity.real-add", [r, base](std::uint64_t s) {
        const GroupFunction f = cases::identity(r);
        return std::pair{f, cases::identity_slope(f, base(s))};
      });
      add("theorems.sum.real-add", "theorems", "derivative of a sum is the oplus of derivatives",
          "2x + 3x: derivative evaluates to 5t", {"fact", "fact_rel", "fp", "limit"},
          [r, base, radii, n, o](std::uint64_t s) {
            const GroupElement a = base(s);
            const SlopeFunction two = cases::scale_real_slope(cases::scale_real(r, 2.0), a, 2.0);
            const SlopeFunction three = cases::scale_real_slope(cases::scale_real(r, 3.0), a, 3.0);
            const SlopeFunction sum = slope_sum(two, three);
            const ProbeSet probe = make_probe_set(*r, derive_seed(s, "probe"), o.probe);
            return combine({check_differentiable(sum.function(), sum, radii, s, n, o).to_report(),
                            check_hom_agreement(derivative_at(sum),
                                                [&](const GroupElement& t) {
                                                  return r->element(5.0 * real_of(t));
                                                },
                                                probe, o)});
          });
    }

    for (const auto& [name, factory] : continuity_cases) {
      add("theorems.continuity." + name, "theorems", "differentiable at a implies continuous at a",
          "modulus of continuity of f at a across the radius sweep", {"modulus"},
          [factory, radii, n, o](std::uint64_t s) {
            const auto [f, slope] = factory(s);
            return continuity_from_differentiability(f, slope, radii, s, n, o);
          });
    }
  }

  const SuiteConfig& cfg_;
  CheckOptions opts_;
  std::vector<GroupPtr> groups_;
  std::vector<CheckDescriptor> out_;
};

template <class T>
T get_as(const nlohmann::json& doc, const char* key) {
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigurationError(std::string("config key '") + key + "': " + e.what());
  }
}

}  // namespace

nlohmann::json SuiteConfig::to_json() const {
  nlohmann::json tols = nlohmann::json::object();
  for (const auto& name : Tolerances::names()) tols[name] = tol.get(name);
  nlohmann::json j;
  j["suite"] = suite;
  j["groups"] = groups.empty() ? default_group_names() : groups;
  j["samples"] = samples;
  j["seed"] = seed;
  j["tolerances"] = std::move(tols);
  j["probe"] = {{"count", probe.count},
                {"min_scale", probe.min_scale},
                {"max_scale", probe.max_scale},
                {"scale", probe.scale}};
  j["radii"] = radii;
  return j;
}

void apply_config_json(SuiteConfig& cfg, const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigurationError("config must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key == "suite") {
      cfg.suite = get_as<std::string>(doc, "suite");
    } else if (key == "groups") {
      cfg.groups = get_as<std::vector<std::string>>(doc, "groups");
    } else if (key == "samples") {
      cfg.samples = get_as<std::size_t>(doc, "samples");
    } else if (key == "seed") {
      cfg.seed = get_as<std::uint64_t>(doc, "seed");
    } else if (key == "out") {
      cfg.out = get_as<std::string>(doc, "out");
    } else if (key == "radii") {
      cfg.radii = get_as<std::vector<double>>(doc, "radii");
    } else if (key == "exec") {
      const auto e = get_as<std::string>(doc, "exec");
      if (e != "serial" && e != "parallel") {
        throw ConfigurationError("config key 'exec' must be 'serial' or 'parallel'");
      }
      cfg.exec = e == "serial" ? Exec::serial : Exec::parallel;
    } else if (key == "tolerances") {
      if (!value.is_object()) throw ConfigurationError("config key 'tolerances' must be an object");
      for (const auto& [name, v] : value.items()) {
        if (!v.is_number()) throw ConfigurationError("tolerance '" + name + "' must be a number");
        cfg.tol.set(name, v.get<double>());
      }
    } else if (key == "probe") {
      if (!value.is_object()) throw ConfigurationError("config key 'probe' must be an object");
      for (const auto& [name, v] : value.items()) {
        if (!v.is_number()) throw ConfigurationError("probe '" + name + "' must be a number");
        if (name == "count") {
          cfg.probe.count = v.get<std::size_t>();
        } else if (name == "min_scale") {
          cfg.probe.min_scale = v.get<double>();
        } else if (name == "max_scale") {
          cfg.probe.max_scale = v.get<double>();
        } else if (name == "scale") {
          cfg.probe.scale = v.get<double>();
        } else {
          throw ConfigurationError("unknown probe key '" + name + "'");
        }
      }
    } else {
      throw ConfigurationError("unknown config key '" + key + "'");
    }
  }
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> kNames = {"all", "axioms", "derivative", "homspace",
                                                  "theorems"};
  return kNames;
}

std::vector<CheckDescriptor> build_checks(const SuiteConfig& cfg) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), cfg.suite) == names.end()) {
    throw ConfigurationError("unknown suite '" + cfg.suite + "'");
  }
  if (cfg.samples == 0) throw ConfigurationError("samples must be >= 1");
  if (cfg.radii.empty()) throw ConfigurationError("radii must not be empty");
  for (std::size_t i = 0; i < cfg.radii.size(); ++i) {
    if (!(cfg.radii[i] > 0.0) || !(cfg.radii[i] < cases::kSlopeRadius / 4) ||
        (i > 0 && !(cfg.radii[i] < cfg.radii[i - 1]))) {
      throw ConfigurationError("radii must be strictly decreasing and inside (0, 0.25)");
    }
  }
  if (cfg.probe.count == 0) throw ConfigurationError("probe count must be >= 1");
  std::vector<CheckDescriptor> all = Builder(cfg).build();
  if (cfg.suite == "all") return all;
  std::vector<CheckDescriptor> picked;
  for (auto& c : all) {
    if (c.suite == cfg.suite) picked.push_back(std::move(c));
  }
  return picked;
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const auto checks = build_checks(cfg);
  SuiteReport report;
  report.config = cfg;
  for (const auto& c : checks) {
    VerificationReport r;
    try {
      r = c.run(derive_seed(cfg.seed, c.id));
    } catch (const ConfigurationError&) {
      throw;
    } catch (const std::exception& e) {
      r = VerificationReport{};
      r.passed = false;
      r.details["error"] = e.what();
    }
    r.check_id = c.id;
    r.anchor = c.anchor;
    report.entries.push_back(std::move(r));
  }
  std::sort(report.entries.begin(), report.entries.end(),
            [](const auto& a, const auto& b) { return a.check_id < b.check_id; });
  report.failures = static_cast<std::size_t>(std::count_if(
      report.entries.begin(), report.entries.end(), [](const auto& r) { return !r.passed; }));
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json SuiteReport::comparison_json() const {
  nlohmann::json entries_json = nlohmann::json::array();
  for (const auto& e : entries) entries_json.push_back(mgd::to_json(e));
  return {{"overall", passed() ? "pass" : "fail"},
          {"failures", failures},
          {"checks", entries.size()},
          {"entries", std::move(entries_json)}};
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["artifact_version"] = std::string(kArtifactVersion);
  j["config"] = config.to_json();
  j["comparison"] = comparison_json();
  j["timing"] = {{"wall_clock_seconds", wall_seconds}};
  return j;
}

std::string list_registry() {
  std::ostringstream os;
  auto section = [&](const char* title, const std::vector<std::string>& names) {
    os << title << ":\n";
    for (const auto& n : names) os << "  " << n << "\n";
  };
  section("groups", registered_group_names());
  section("functions", cases::function_names());
  section("slopes", cases::slope_names());
  section("suites", suite_names());
  return os.str();
}

std::string explain(const SuiteConfig& cfg, std::string_view check_id) {
  SuiteConfig all = cfg;
  all.suite = "all";
  for (const auto& c : build_checks(all)) {
    if (c.id != check_id) continue;
    std::ostringstream os;
    os << "check:       " << c.id << "\n"
       << "suite:       " << c.suite << "\n"
       << "anchor:      " << c.anchor << "\n"
       << "description: " << c.description << "\n"
       << "tolerances:\n";
    for (const auto& t : c.tolerances) os << "  " << t << " = " << cfg.tol.get(t) << "\n";
    return os.str();
  }
  throw ConfigurationError("unknown check '" + std::string(check_id) + "'");
}

std::string summary_table(const SuiteReport& report) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-6s %-58s %14s %12s\n", "status", "check", "max_violation",
                "tolerance");
  os << line;
  for (const auto& e : report.entries) {
    std::snprintf(line, sizeof line, "%-6s %-58s %14.6g %12.3g\n", e.passed ? "PASS" : "FAIL",
                  e.check_id.c_str(), e.max_violation, e.tolerance);
    os << line;
  }
  os << report.entries.size() - report.failures << "/" << report.entries.size() << " passed, "
     << report.failures << " failed (" << report.wall_seconds << " s)\n";
  return os.str();
}

}  // namespace mgd
