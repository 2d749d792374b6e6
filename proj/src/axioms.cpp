#include "mgd/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mgd/errors.hpp"

namespace mgd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_count(std::size_t count) {
  if (count == 0) throw ContractViolation("sample count must be >= 1");
}

}  // namespace

VerificationReport check_metric_axioms(const MetricGroupSpec& g, std::uint64_t seed,
                                       std::size_t count, const CheckOptions& opts) {
  require_count(count);
  const auto v = g.sample(seed, count + 2);

  // Exact criteria: any breach scores its magnitude (or inf when it has none).
  auto exact_breach = [&](std::size_t i) {
    const auto& x = v[i];
    const auto& y = v[i + 1];
    const double dxy = g.distance(x, y);
    const double dyx = g.distance(y, x);
    const double dxx = g.distance(x, x);
    double breach = -kInf;
    if (dxy != dyx) breach = std::max(breach, std::abs(dxy - dyx));
    if (dxx != 0.0) breach = std::max(breach, std::abs(dxx));
    if (dxy < 0.0) breach = std::max(breach, -dxy);
    if (dxy == 0.0 && !(x.payload == y.payload)) breach = kInf;
    return breach;
  };
  auto triangle = [&](std::size_t i) {
    const double dxy = g.distance(v[i], v[i + 1]);
    const double dyz = g.distance(v[i + 1], v[i + 2]);
    const double dxz = g.distance(v[i], v[i + 2]);
    return (dxz - dxy - dyz) / (1.0 + std::abs(dxy) + std::abs(dyz));
  };

  const Extremum ex = max_over(opts.exec, count, exact_breach);
  const Extremum tri = max_over(opts.exec, count, triangle);
  const bool exact_ok = !(ex.value > -kInf);

  VerificationReport r;
  r.samples = count;
  r.tolerance = opts.tol.fp;
  r.max_violation = exact_ok ? tri.value : std::max(tri.value, ex.value);
  r.passed = exact_ok && tri.value <= opts.tol.fp;
  r.details["triangle_max_relative_excess"] = number_json(tri.value);
  r.details["exact_axioms_hold"] = exact_ok;
  const std::size_t w = exact_ok ? tri.index : ex.index;
  if (!r.passed) {
    r.witness = {{"x", g.to_json(v[w])},
                 {"y", g.to_json(v[w + 1])},
                 {"z", g.to_json(v[w + 2])},
                 {"d_xy", number_json(g.distance(v[w], v[w + 1]))},
                 {"d_yx", number_json(g.distance(v[w + 1], v[w]))},
                 {"d_xx", number_json(g.distance(v[w], v[w]))}};
  }
  return r;
}

VerificationReport check_group_axioms(const MetricGroupSpec& g, std::uint64_t seed,
                                      std::size_t count, const CheckOptions& opts) {
  require_count(count);
  const auto v = g.sample(seed, count + 2);
  const auto& e = g.identity();
  const bool abelian = g.traits().is_abelian;

  auto violation = [&](std::size_t i) {
    const auto& x = v[i];
    const auto& y = v[i + 1];
    const auto& z = v[i + 2];
    const auto xy = g.compose(x, y);
    const auto lhs = g.compose(xy, z);
    const auto rhs = g.compose(x, g.compose(y, z));
    const double scale = 1.0 + g.distance(lhs, e) + g.distance(x, e) + g.distance(y, e) +
                         g.distance(z, e);
    const auto xinv = g.inverse(x);
    double worst = g.distance(lhs, rhs);
    worst = std::max(worst, g.distance(g.compose(e, x), x));
    worst = std::max(worst, g.distance(g.compose(x, e), x));
    worst = std::max(worst, g.distance(g.compose(x, xinv), e));
    worst = std::max(worst, g.distance(g.compose(xinv, x), e));
    if (abelian) worst = std::max(worst, g.distance(xy, g.compose(y, x)));
    return worst / scale;
  };

  const Extremum m = max_over(opts.exec, count, violation);
  VerificationReport r;
  r.samples = count;
  r.tolerance = opts.tol.fp;
  r.max_violation = m.value;
  r.passed = m.value <= opts.tol.fp;
  r.details["commutativity_checked"] = abelian;
  if (!r.passed) {
    r.witness = {{"x", g.to_json(v[m.index])},
                 {"y", g.to_json(v[m.index + 1])},
                 {"z", g.to_json(v[m.index + 2])}};
  }
  return r;
}

VerificationReport check_group_metric_axiom1(const MetricGroupSpec& g, std::uint64_t seed,
                                             std::size_t count, const CheckOptions& opts) {
  require_count(count);
  const auto v = g.sample(seed, count + 1);
  const auto& e = g.identity();

  auto excess = [&](std::size_t i) {
    const auto& x = v[i];
    const auto& y = v[i + 1];
    const double dx = g.distance(x, e);
    const double dy = g.distance(y, e);
    const double lhs = g.distance(g.compose(x, y), e);
    const double rhs = dx * dy + dx + dy;
    return (lhs - rhs) / (1.0 + rhs);
  };

  const Extremum m = max_over(opts.exec, count, excess);
  VerificationReport r;
  r.samples = count;
  r.tolerance = opts.tol.fp;
  r.max_violation = m.value;
  r.passed = m.value <= opts.tol.fp;
  if (!r.passed) {
    r.witness = {{"x", g.to_json(v[m.index])}, {"y", g.to_json(v[m.index + 1])}};
  }
  return r;
}

TranslationConstant estimate_translation_constant(const MetricGroupSpec& g, const GroupElement& k,
                                                  std::uint64_t seed, std::size_t count,
                                                  Exec exec) {
  require_count(count);
  g.require_member(k);
  if (!g.traits().claims_group_metric) {
    throw ContractViolation("group '" + g.id() + "' does not claim a group metric");
  }
  const auto v = g.sample(seed, count + 1);
  // NaN marks a degenerate pair.
  const auto ratios = map_indices(exec, count, [&](std::size_t i) {
    const double d = g.distance(v[i], v[i + 1]);
    if (!(d > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    return g.distance(g.compose(v[i], k), g.compose(v[i + 1], k)) / d;
  });

  TranslationConstant tc;
  tc.k = k;
  tc.samples = count;
  for (double q : ratios) {
    if (std::isnan(q)) {
      ++tc.skipped;
    } else {
      tc.sampled_ratio = std::max(tc.sampled_ratio, q);
    }
  }
  if (tc.skipped == count) {
    throw EstimationError("every sampled pair in group '" + g.id() + "' was degenerate");
  }
  if (auto exact = g.exact_translation_constant(k)) {
    tc.c_k = *exact;
    tc.exact = true;
  } else {
    tc.c_k = tc.sampled_ratio;
  }
  return tc;
}

VerificationReport check_translation_constant(const MetricGroupSpec& g, const GroupElement& k,
                                              std::uint64_t seed, std::size_t count,
                                              const CheckOptions& opts) {
  const TranslationConstant tc = estimate_translation_constant(g, k, seed, count, opts.exec);
  VerificationReport r;
  r.samples = tc.samples;
  r.skipped = tc.skipped;
  r.tolerance = opts.tol.fp;
  r.max_violation = tc.c_k > 0.0 ? tc.sampled_ratio / tc.c_k - 1.0 : kInf;
  r.passed = tc.c_k > 0.0 && r.max_violation <= opts.tol.fp;
  r.details["k"] = g.to_json(k);
  r.details["c_k"] = number_json(tc.c_k);
  r.details["exact"] = tc.exact;
  r.details["sampled_ratio"] = number_json(tc.sampled_ratio);
  return r;
}

GroupElement nth_root(const MetricGroupSpec& g, const GroupElement& x, std::uint64_t n) {
  return g.nth_root(x, n);
}

VerificationReport check_nth_root_roundtrip(const MetricGroupSpec& g, std::uint64_t seed,
                                            std::size_t count, std::uint64_t n_max,
                                            const CheckOptions& opts) {
  require_count(count);
  if (n_max == 0) throw ContractViolation("n_max must be >= 1");
  if (!g.traits().claims_divisible) {
    throw UnsupportedOperation("group '" + g.id() + "' is not divisible");
  }
  const auto v = g.sample(seed, count);
  auto order = [&](std::size_t i) { return i + 1 == count ? n_max : 1 + i % n_max; };
  auto residual = [&](std::size_t i) {
    const auto root = g.nth_root(v[i], order(i));
    const double d = g.distance(g.power(root, order(i)), v[i]);
    return d / (1.0 + g.distance(v[i], g.identity()));
  };
  const Extremum m = max_over(opts.exec, count, residual);
  VerificationReport r;
  r.samples = count;
  r.tolerance = opts.tol.root;
  r.max_violation = m.value;
  r.passed = m.value <= opts.tol.root;
  r.details["n_max"] = n_max;
  if (!r.passed) r.witness = {{"g", g.to_json(v[m.index])}, {"n", order(m.index)}};
  return r;
}

VerificationReport check_root_limit(const MetricGroupSpec& g, const GroupElement& x,
                                    std::uint64_t n_max, const CheckOptions& opts) {
  if (n_max < 2) throw ContractViolation("root limit needs n_max >= 2");
  const auto dist = map_indices(opts.exec, n_max, [&](std::size_t i) {
    return g.distance(g.nth_root(x, i + 1), g.identity());
  });

  std::size_t first_breach = Extremum::npos;
  for (std::size_t i = 1; i < dist.size() && first_breach == Extremum::npos; ++i) {
    const bool converged = dist[i - 1] == 0.0 && dist[i] == 0.0;
    if (!converged && !(dist[i] < dist[i - 1])) first_breach = i;
  }

  VerificationReport r;
  r.samples = n_max;
  r.tolerance = opts.tol.limit;
  r.max_violation = dist.back();
  r.passed = first_breach == Extremum::npos && dist.back() < opts.tol.limit;
  r.details["x"] = g.to_json(x);
  nlohmann::json seq = nlohmann::json::array();
  for (std::uint64_t n = 1; n <= n_max; n *= 2) {
    seq.push_back({{"n", n}, {"distance", number_json(dist[n - 1])}});
  }
  r.details["distance_at_powers_of_two"] = std::move(seq);
  r.details["distance_at_n_max"] = number_json(dist.back());
  r.details["strictly_decreasing"] = first_breach == Extremum::npos;
  if (first_breach != Extremum::npos) {
    r.witness = {{"n", first_breach + 1},
                 {"distance", number_json(dist[first_breach])},
                 {"previous", number_json(dist[first_breach - 1])}};
  }
  return r;
}

}  // namespace mgd
