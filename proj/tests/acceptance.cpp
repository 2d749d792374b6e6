// Acceptance criteria, one PASS/FAIL line each. Exit status is the number of
// failed criteria.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "mgd/axioms.hpp"
#include "mgd/catalog.hpp"
#include "mgd/derivative.hpp"
#include "mgd/groups.hpp"
#include "mgd/homspace.hpp"
#include "mgd/suite.hpp"
#include "oracle.hpp"

using namespace mgd;

namespace {

constexpr std::size_t kPairs = 10000;
constexpr std::size_t kCasePairs = 1000;
const std::vector<double> kRadii = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};

struct Outcome {
  bool passed = true;
  std::vector<std::string> notes;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      if (failures.size() < 4) failures.push_back(what);
    }
  }
  void note(const std::string& text) { notes.push_back(text); }

  std::string text() const {
    std::string out;
    for (const auto& n : notes) out += (out.empty() ? "" : "; ") + n;
    for (const auto& f : failures) out += (out.empty() ? "failed: " : "; failed: ") + f;
    return out;
  }
};

CheckOptions strict(double fp, double fact = 1e-10, double fact_rel = 0.0) {
  CheckOptions o;
  o.tol.fp = fp;
  o.tol.hom = fp;
  o.tol.fact = fact;
  o.tol.fact_rel = fact_rel;
  return o;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

GroupElement from_dense(const GroupPtr& m, const oracle::Dense& a) {
  return m->element(Matrix(oracle::side(a), a));
}

std::vector<std::pair<GroupElement, GroupElement>> uniform_pairs(const GroupPtr& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<GroupElement, GroupElement>> pairs;
  for (std::size_t i = 0; i < kCasePairs; ++i) {
    auto x = from_dense(m, oracle::uniform(rng, 2));
    auto a = from_dense(m, oracle::uniform(rng, 2));
    pairs.emplace_back(std::move(x), std::move(a));
  }
  return pairs;
}

// Max over the probe of the absolute distance between h(y) and expected(y).
double max_abs_gap(const Homomorphism& h, const std::function<oracle::Dense(const oracle::Dense&)>& expected,
                   const ProbeSet& probe) {
  double worst = 0.0;
  for (const auto& y : probe.points()) {
    const auto e = matrix_of(y).entries();
    const oracle::Dense yd(e.begin(), e.end());
    const GroupElement hy = h(y);
    const auto got = matrix_of(hy).entries();
    worst = std::max(worst, oracle::frob_diff(oracle::Dense(got.begin(), got.end()), expected(yd)));
  }
  return worst;
}

Outcome product_bound() {
  Outcome o;
  for (const char* name : {"real-add", "complex-mul", "matrix-add:2"}) {
    const auto r = check_group_metric_axiom1(*make_group(name), 101, kPairs, strict(1e-9));
    o.require(r.passed, std::string(name) + " excess " + fmt(r.max_violation));
  }
  const auto c = make_complex_multiplicative();
  std::mt19937_64 rng(102);
  std::uniform_real_distribution<double> u(1.0, 10.0);
  double worst = 0.0;
  for (std::size_t i = 0; i < kPairs; ++i) {
    const double x = u(rng);
    const double y = u(rng);
    if (x == 1.0 || y == 1.0) continue;
    const auto ex = c->element(std::complex<double>(x, 0.0));
    const auto ey = c->element(std::complex<double>(y, 0.0));
    const double dx = c->distance(ex, c->identity());
    const double dy = c->distance(ey, c->identity());
    const double lhs = c->distance(c->compose(ex, ey), c->identity());
    worst = std::max(worst, std::abs(lhs - (dx * dy + dx + dy)));
  }
  o.require(worst <= 1e-12, "complex equality gap " + fmt(worst));
  o.note(std::string("equality gap ") + fmt(worst));
  return o;
}

Outcome translation_constants() {
  Outcome o;
  const auto m = make_matrix_additive(2);
  for (const auto& k : m->sample(201, 5)) {
    const auto t = estimate_translation_constant(*m, k, 202, kPairs);
    o.require(t.exact && t.c_k == 1.0, "matrix c_K " + fmt(t.c_k));
    o.require(check_translation_constant(*m, k, 203, kPairs, strict(1e-9)).passed, "matrix ratios");
  }
  const auto c = make_complex_multiplicative();
  double worst = 0.0;
  for (const auto& k : c->sample(204, 5)) {
    const double modulus = std::abs(complex_of(k));
    const auto t = estimate_translation_constant(*c, k, 205, kPairs);
    o.require(std::abs(t.c_k - modulus) <= 1e-9 * modulus, "complex c_k " + fmt(t.c_k));
    const auto v = c->sample(206, 2 * kPairs);
    for (std::size_t i = 0; i < kPairs; ++i) {
      const double d = c->distance(v[2 * i], v[2 * i + 1]);
      const double dk = c->distance(c->compose(v[2 * i], k), c->compose(v[2 * i + 1], k));
      worst = std::max(worst, std::abs(dk / d - modulus) / modulus);
    }
  }
  o.require(worst <= 1e-9, "complex ratio spread " + fmt(worst));
  o.note("matrix c_K = 1 exact; complex ratio spread " + fmt(worst));
  return o;
}

Outcome divisibility() {
  Outcome o;
  CheckOptions opts;
  opts.tol.root = 1e-10;
  opts.tol.limit = 1e-2;
  for (const char* name : {"real-add", "pos-real-mul", "circle"}) {
    const auto g = make_group(name);
    const auto rt = check_nth_root_roundtrip(*g, 301, kPairs, 64, opts);
    o.require(rt.passed, std::string(name) + " roundtrip " + fmt(rt.max_violation));
    o.note(std::string(name) + " roundtrip " + fmt(rt.max_violation));
    for (const auto& x : g->sample(302, 10)) {
      if (g->distance(x, g->identity()) == 0.0) continue;
      const auto lim = check_root_limit(*g, x, 1024, opts);
      o.require(lim.passed, std::string(name) + " limit " + fmt(lim.max_violation));
    }
  }
  return o;
}

Homomorphism random_hom(const GroupPtr& g, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  if (g->id() == "real-add") return cases::linear_real(g, 3.0 * n(rng));
  return cases::sylvester(g, Matrix(2, oracle::uniform(rng, 2)), Matrix(2, oracle::uniform(rng, 2)), "BY+YC");
}

Outcome hom_group_laws() {
  Outcome o;
  for (const char* name : {"real-add", "matrix-add:2"}) {
    const auto g = make_group(name);
    const auto probe = make_probe_set(*g, 401);
    o.require(probe.size() == 64, "probe size");
    std::mt19937_64 rng(402);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const auto phi = random_hom(g, rng);
      const auto psi = random_hom(g, rng);
      const auto chi = random_hom(g, rng);
      const auto r = check_group_laws_on_hom(phi, psi, chi, probe, strict(1e-10));
      worst = std::max(worst, r.max_violation);
      o.require(r.passed, std::string(name) + " laws " + fmt(r.max_violation));
    }
    o.note(std::string(name) + " worst " + fmt(worst));
  }
  return o;
}

Outcome hom_metric_properties() {
  Outcome o;
  for (const char* name : {"real-add", "matrix-add:2"}) {
    const auto g = make_group(name);
    const auto probe = make_probe_set(*g, 501);
    const auto larger = probe.merged(make_probe_set(*g, 502));
    std::mt19937_64 rng(503);
    for (int i = 0; i < 100; ++i) {
      const auto phi = random_hom(g, rng);
      const auto psi = random_hom(g, rng);
      const auto chi = random_hom(g, rng);
      const auto r = check_hom_metric_properties(phi, psi, chi, probe, larger, strict(1e-12));
      o.require(r.passed, std::string(name) + " triple " + std::to_string(i));
    }
    o.note(std::string(name) + " 100 triples");
  }
  return o;
}

Outcome matrix_square() {
  Outcome o;
  const auto m = make_matrix_additive(2);
  const auto sq = cases::square_matrix(m);
  const auto pairs = uniform_pairs(m, 601);
  const auto r = check_factorization_pairs(
      sq, [&](const GroupElement& a) { return cases::square_slope_right(sq, a); }, pairs, strict(1e-9));
  o.require(r.passed, "pair residual " + fmt(r.max_violation));
  o.note("pair residual " + fmt(r.max_violation));

  std::mt19937_64 rng(602);
  const auto probe = make_probe_set(*m, 603);
  double value_gap = 0.0;
  const std::array<double, 3> steps = {1e-1, 1e-2, 1e-3};
  std::array<double, 3> fd_worst = {0.0, 0.0, 0.0};
  for (int i = 0; i < 20; ++i) {
    const auto a = oracle::uniform(rng, 2);
    const auto ea = from_dense(m, a);
    const auto d = derivative_at(cases::square_slope_right(sq, ea));
    value_gap = std::max(value_gap, max_abs_gap(d, [&](const oracle::Dense& y) { return oracle::sylvester(a, y); }, probe));
    for (int j = 0; j < 10; ++j) {
      const auto y = oracle::uniform(rng, 2);
      const double y2 = oracle::frob(oracle::mul(y, y));
      if (y2 < 0.05) continue;
      for (std::size_t k = 0; k < steps.size(); ++k) {
        const double h = steps[k];
        const GroupElement quotient = frechet_fd_oracle(sq, ea, from_dense(m, y), h);
        const auto qe = matrix_of(quotient).entries();
        const oracle::Dense q(qe.begin(), qe.end());
        const double ratio = oracle::frob_diff(q, oracle::sylvester(a, y)) / h;
        fd_worst[k] = std::max(fd_worst[k], std::abs(ratio - y2) / y2);
      }
    }
  }
  o.require(value_gap <= 1e-10, "derivative gap " + fmt(value_gap));
  for (std::size_t k = 0; k < steps.size(); ++k) {
    o.note("fd relative at h=" + fmt(steps[k]) + " " + fmt(fd_worst[k]));
    o.require(fd_worst[k] <= 1e-9, "fd relative at h=" + fmt(steps[k]));
  }
  o.note("derivative gap " + fmt(value_gap));
  return o;
}

Outcome circle_cube() {
  Outcome o;
  const auto c = make_circle();
  const auto cube = cases::cube(c);
  const auto v = c->sample(701, 2 * kCasePairs);
  std::vector<std::pair<GroupElement, GroupElement>> pairs;
  for (std::size_t i = 0; i < kCasePairs; ++i) pairs.emplace_back(v[2 * i], v[2 * i + 1]);
  const auto r = check_factorization_pairs(
      cube, [&](const GroupElement& a) { return cases::cube_slope_power(cube, a); }, pairs,
      strict(1e-12, 1e-12, 0.0));
  o.require(r.passed, "residual " + fmt(r.max_violation));
  double worst = 0.0;
  const auto probe = make_probe_set(*c, 702);
  for (const auto& a : c->sample(703, 100)) {
    const auto p = derivative_at(cases::cube_slope_power(cube, a));
    const auto q = derivative_at(cases::cube_slope_adjoint(cube, a));
    for (const auto& t : probe.points()) worst = std::max(worst, c->distance(p(t), q(t)));
    for (const auto& t : c->sample(704, 100)) worst = std::max(worst, c->distance(p(t), q(t)));
  }
  o.require(worst <= 1e-12, "adjoint gap " + fmt(worst));
  o.note(std::string("adjoint gap ") + fmt(worst));
  return o;
}

Outcome sum_rule() {
  Outcome o;
  const auto m = make_matrix_additive(2);
  const auto sq = cases::square_matrix(m);
  std::mt19937_64 rng(801);
  const auto probe = make_probe_set(*m, 802);
  double worst_residual = 0.0;
  double worst_gap = 0.0;
  for (int i = 0; i < 10; ++i) {
    const auto a = oracle::uniform(rng, 2);
    const auto s = cases::square_slope_right(sq, from_dense(m, a));
    const auto sum = slope_sum(s, s);
    const auto diff = check_differentiable(sum.function(), sum, kRadii, 803 + i, 1000, strict(1e-10));
    o.require(diff.passed, "factorization " + fmt(diff.max_factorization_residual));
    const auto pairs = check_factorization_pairs(
        sum.function(),
        [&](const GroupElement& b) {
          const auto sb = cases::square_slope_right(sq, b);
          return slope_sum(sb, sb);
        },
        uniform_pairs(m, 804 + i), strict(1e-10));
    o.require(pairs.passed, "pair residual " + fmt(pairs.max_violation));
    const double gap = max_abs_gap(derivative_at(sum),
                                   [&](const oracle::Dense& y) { return oracle::scaled(2.0, oracle::sylvester(a, y)); },
                                   probe);
    o.require(gap <= 1e-10, "derivative gap " + fmt(gap));
    worst_residual = std::max({worst_residual, diff.max_factorization_residual, pairs.max_violation});
    worst_gap = std::max(worst_gap, gap);
  }
  o.note("residual " + fmt(worst_residual) + "; derivative gap " + fmt(worst_gap));
  return o;
}

Outcome scale_rule() {
  Outcome o;
  const auto m = make_matrix_additive(2);
  const auto sq = cases::square_matrix(m);
  std::mt19937_64 rng(901);
  const auto probe = make_probe_set(*m, 902);
  double worst_residual = 0.0;
  double worst_gap = 0.0;
  for (double alpha : {0.0, 1.0, 2.0, -3.5}) {
    const auto a = oracle::uniform(rng, 2);
    const auto sc = slope_scale(alpha, cases::square_slope_right(sq, from_dense(m, a)));
    const auto diff = check_differentiable(sc.function(), sc, kRadii, 903, 1000, strict(1e-10));
    o.require(diff.passed, "alpha " + fmt(alpha) + " factorization " + fmt(diff.max_factorization_residual));
    const auto pairs = check_factorization_pairs(
        sc.function(), [&](const GroupElement& b) { return slope_scale(alpha, cases::square_slope_right(sq, b)); },
        uniform_pairs(m, 904), strict(1e-10));
    o.require(pairs.passed, "alpha " + fmt(alpha) + " pair residual " + fmt(pairs.max_violation));
    const double gap = max_abs_gap(
        derivative_at(sc), [&](const oracle::Dense& y) { return oracle::scaled(alpha, oracle::sylvester(a, y)); }, probe);
    o.require(gap <= 1e-10, "alpha " + fmt(alpha) + " derivative gap " + fmt(gap));
    worst_residual = std::max({worst_residual, diff.max_factorization_residual, pairs.max_violation});
    worst_gap = std::max(worst_gap, gap);
  }
  o.note("residual " + fmt(worst_residual) + "; derivative gap " + fmt(worst_gap));
  return o;
}

Outcome chain_rule() {
  Outcome o;
  const auto m = make_matrix_additive(2);
  const auto sq = cases::square_matrix(m);
  auto quartic = [&](const GroupElement& a) {
    return slope_chain(cases::square_slope_right(sq, sq(a)), cases::square_slope_right(sq, a));
  };
  std::mt19937_64 rng(1001);
  const auto a = oracle::uniform(rng, 2);
  const auto q = quartic(from_dense(m, a));
  const auto pairs = check_factorization_pairs(q.function(), quartic, uniform_pairs(m, 1002), strict(1e-9, 1e-9));
  o.require(pairs.passed, "pair residual " + fmt(pairs.max_violation));
  const auto diff = check_differentiable(q.function(), q, kRadii, 1003, 1000, strict(1e-9, 1e-9));
  o.require(diff.passed, "factorization " + fmt(diff.max_factorization_residual));
  const auto a2 = oracle::mul(a, a);
  const double gap = max_abs_gap(derivative_at(q),
                                 [&](const oracle::Dense& y) {
                                   const auto d = oracle::sylvester(a, y);
                                   return oracle::add(oracle::mul(a2, d), oracle::mul(d, a2));
                                 },
                                 make_probe_set(*m, 1004));
  o.require(gap <= 1e-9, "derivative gap " + fmt(gap));

  const auto c = make_circle();
  const auto cube = cases::cube(c);
  double worst = 0.0;
  for (const auto& b : c->sample(1005, 20)) {
    const auto nine = slope_chain(cases::cube_slope_power(cube, cube(b)), cases::cube_slope_power(cube, b));
    const auto d = derivative_at(nine);
    for (const auto& t : c->sample(1006, 200)) worst = std::max(worst, c->distance(d(t), c->power(t, 9)));
  }
  o.require(worst <= 1e-12, "circle gap " + fmt(worst));
  o.note(std::string("matrix gap ") + fmt(gap) + "; circle gap " + fmt(worst));
  return o;
}

Outcome continuity_modulus() {
  Outcome o;
  SuiteConfig cfg;
  cfg.suite = "theorems";
  const auto report = run_suite(cfg);
  std::size_t cases_seen = 0;
  double worst = 0.0;
  for (const auto& e : report.entries) {
    if (!e.check_id.starts_with("theorems.continuity.")) continue;
    ++cases_seen;
    worst = std::max(worst, e.max_violation);
    o.require(e.passed, e.check_id + " " + fmt(e.max_violation));
  }
  o.require(cases_seen >= 8, "only " + std::to_string(cases_seen) + " cases");
  o.note(std::to_string(cases_seen) + " cases, worst modulus " + fmt(worst));
  return o;
}

Outcome uniqueness() {
  Outcome o;
  const auto m = make_matrix_additive(2);
  const auto sq = cases::square_matrix(m);
  const auto probe = make_probe_set(*m, 1201);
  std::mt19937_64 rng(1202);
  double worst_agree = 0.0;
  double least_gap = 1.0;
  for (int i = 0; i < 10; ++i) {
    const auto a = from_dense(m, oracle::uniform(rng, 2));
    const auto z = from_dense(m, oracle::uniform(rng, 2));
    const auto right = cases::square_slope_right(sq, a);
    const auto ok = uniqueness_probe(right, cases::square_slope_left(sq, a), z, 1 << 16, probe);
    const double agree = ok.details["metric_at_base"].get<double>();
    worst_agree = std::max(worst_agree, agree);
    o.require(ok.passed && agree <= 1e-10, "variants " + fmt(agree));
    const auto bad = uniqueness_probe(right, cases::square_slope_perturbed(sq, a), z, 1 << 16, probe);
    const double gap = bad.details["metric_at_base"].get<double>();
    least_gap = std::min(least_gap, gap);
    o.require(!bad.passed && gap > 0.1, "perturbed " + fmt(gap));
  }
  o.note(std::string("variants ") + fmt(worst_agree) + "; perturbed " + fmt(least_gap));
  return o;
}

Outcome determinism() {
  Outcome o;
  SuiteConfig cfg;
  const auto first = run_suite(cfg).comparison_json().dump();
  const auto second = run_suite(cfg).comparison_json().dump();
  o.require(first == second, "comparison sections differ");
  o.note(std::to_string(first.size()) + " bytes");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"product bound on reals, nonzero complexes and matrices", product_bound},
      {"right-translation constants", translation_constants},
      {"unique roots and root limit", divisibility},
      {"homomorphism space group laws", hom_group_laws},
      {"homomorphism space metric", hom_metric_properties},
      {"matrix squaring derivative", matrix_square},
      {"circle cubing derivative", circle_cube},
      {"sum rule", sum_rule},
      {"scalar rule", scale_rule},
      {"chain rule", chain_rule},
      {"continuity of differentiable maps", continuity_modulus},
      {"uniqueness of the derivative", uniqueness},
      {"report determinism", determinism},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome out;
    try {
      out = run();
    } catch (const std::exception& e) {
      out.passed = false;
      out.require(false, std::string("exception: ") + e.what());
    }
    failed += out.passed ? 0 : 1;
    std::printf("%s %2d %s (%s)\n", out.passed ? "PASS" : "FAIL", index, name, out.text().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
