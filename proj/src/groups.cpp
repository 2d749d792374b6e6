#include "mgd/groups.hpp"

#include <charconv>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "mgd/errors.hpp"

namespace mgd {

namespace {

using cplx = std::complex<double>;

template <class Draw>
std::function<std::vector<Payload>(std::uint64_t, std::size_t)> sampler_from(Draw draw) {
  return [draw](std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    std::vector<Payload> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(draw(rng));
    return out;
  };
}

double real_root(double g, std::uint64_t n) {
  if (n == 2) return std::sqrt(g);
  if (n == 3) return std::cbrt(g);
  return std::pow(g, 1.0 / static_cast<double>(n));
}

double chord(double a, double b) { return 2.0 * std::abs(std::sin(0.5 * (a - b))); }

}  // namespace

double canonical_angle(double theta) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double r = std::remainder(theta, kTwoPi);
  if (r <= -std::numbers::pi) r += kTwoPi;
  if (r > std::numbers::pi) r -= kTwoPi;
  return r;
}

GroupPtr make_real_additive(SamplingOptions s) {
  GroupOps ops;
  ops.compose = [](const Payload& x, const Payload& y) -> Payload { return real_of(x) + real_of(y); };
  ops.inverse = [](const Payload& x) -> Payload { return -real_of(x); };
  ops.identity = 0.0;
  ops.metric = [](const Payload& x, const Payload& y) { return std::abs(real_of(x) - real_of(y)); };
  ops.sampler = sampler_from([scale = s.scale](std::mt19937_64& rng) -> Payload {
    return scale * std::normal_distribution<double>(0.0, 1.0)(rng);
  });
  ops.nth_root = [](const Payload& g, std::uint64_t n) -> Payload {
    return real_of(g) / static_cast<double>(n);
  };
  ops.scalar_action = [](double a, const Payload& x) -> Payload { return a * real_of(x); };
  ops.real_power = [](const Payload& x, double t) -> Payload { return t * real_of(x); };
  ops.translation_constant = [](const Payload&) { return 1.0; };
  ops.validate = [](const Payload& x) {
    if (!std::isfinite(real_of(x))) throw ContractViolation("real element must be finite");
  };
  ops.to_json = [](const Payload& x) -> nlohmann::json { return real_of(x); };
  return std::make_shared<const MetricGroupSpec>(
      "real-add", "real numbers under addition, metric |x - y|", std::move(ops),
      GroupTraits{.is_abelian = true, .claims_group_metric = true, .claims_divisible = true});
}

GroupPtr make_positive_reals(SamplingOptions s) {
  GroupOps ops;
  ops.compose = [](const Payload& x, const Payload& y) -> Payload { return real_of(x) * real_of(y); };
  ops.inverse = [](const Payload& x) -> Payload { return 1.0 / real_of(x); };
  ops.identity = 1.0;
  ops.metric = [](const Payload& x, const Payload& y) { return std::abs(real_of(x) - real_of(y)); };
  ops.sampler = sampler_from([scale = s.scale](std::mt19937_64& rng) -> Payload {
    return std::exp(scale * std::normal_distribution<double>(0.0, 1.0)(rng));
  });
  ops.nth_root = [](const Payload& g, std::uint64_t n) -> Payload { return real_root(real_of(g), n); };
  ops.real_power = [](const Payload& x, double t) -> Payload { return std::pow(real_of(x), t); };
  ops.translation_constant = [](const Payload& k) { return real_of(k); };
  ops.validate = [](const Payload& x) {
    const double v = real_of(x);
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw ContractViolation("positive-real element must be finite and > 0");
    }
  };
  ops.to_json = [](const Payload& x) -> nlohmann::json { return real_of(x); };
  return std::make_shared<const MetricGroupSpec>(
      "pos-real-mul", "positive reals under multiplication, metric |x - y|", std::move(ops),
      GroupTraits{.is_abelian = true, .claims_group_metric = true, .claims_divisible = true});
}

GroupPtr make_complex_multiplicative(SamplingOptions s) {
  GroupOps ops;
  ops.compose = [](const Payload& x, const Payload& y) -> Payload {
    return complex_of(x) * complex_of(y);
  };
  ops.inverse = [](const Payload& x) -> Payload { return 1.0 / complex_of(x); };
  ops.identity = cplx(1.0, 0.0);
  ops.metric = [](const Payload& x, const Payload& y) {
    return std::abs(complex_of(x) - complex_of(y));
  };
  ops.sampler = sampler_from([scale = s.scale](std::mt19937_64& rng) -> Payload {
    std::normal_distribution<double> n(0.0, 1.0);
    const double re = scale * n(rng);
    const double im = scale * n(rng);
    return std::exp(cplx(re, im));
  });
  ops.real_power = [](const Payload& x, double t) -> Payload {
    return std::exp(t * std::log(complex_of(x)));
  };
  ops.translation_constant = [](const Payload& k) { return std::abs(complex_of(k)); };
  ops.validate = [](const Payload& x) {
    const cplx& z = complex_of(x);
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || z == cplx(0.0, 0.0)) {
      throw ContractViolation("complex element must be finite and nonzero");
    }
  };
  ops.to_json = [](const Payload& x) -> nlohmann::json {
    return nlohmann::json::array({complex_of(x).real(), complex_of(x).imag()});
  };
  return std::make_shared<const MetricGroupSpec>(
      "complex-mul", "nonzero complex numbers under multiplication, metric |x - y|",
      std::move(ops),
      GroupTraits{.is_abelian = true, .claims_group_metric = true, .claims_divisible = false});
}

GroupPtr make_circle(SamplingOptions s) {
  GroupOps ops;
  ops.compose = [](const Payload& x, const Payload& y) -> Payload {
    return canonical_angle(real_of(x) + real_of(y));
  };
  ops.inverse = [](const Payload& x) -> Payload { return canonical_angle(-real_of(x)); };
  ops.identity = 0.0;
  ops.metric = [](const Payload& x, const Payload& y) { return chord(real_of(x), real_of(y)); };
  ops.sampler = sampler_from([scale = s.scale](std::mt19937_64& rng) -> Payload {
    return canonical_angle(scale * std::normal_distribution<double>(0.0, 1.0)(rng));
  });
  ops.nth_root = [](const Payload& g, std::uint64_t n) -> Payload {
    return real_of(g) / static_cast<double>(n);
  };
  ops.real_power = [](const Payload& x, double t) -> Payload {
    return canonical_angle(t * real_of(x));
  };
  ops.translation_constant = [](const Payload&) { return 1.0; };
  ops.validate = [](const Payload& x) {
    const double a = real_of(x);
    if (!std::isfinite(a) || canonical_angle(a) != a) {
      throw ContractViolation("circle element must be a canonical angle in (-pi, pi]");
    }
  };
  ops.to_json = [](const Payload& x) -> nlohmann::json { return real_of(x); };
  return std::make_shared<const MetricGroupSpec>(
      "circle", "unit circle under multiplication, stored as angle, chord metric",
      std::move(ops),
      GroupTraits{.is_abelian = true, .claims_group_metric = true, .claims_divisible = true});
}

GroupPtr make_matrix_additive(std::size_t n, SamplingOptions s) {
  if (n == 0) throw ConfigurationError("matrix dimension must be >= 1");
  GroupOps ops;
  ops.compose = [](const Payload& x, const Payload& y) -> Payload {
    return matrix_of(x) + matrix_of(y);
  };
  ops.inverse = [](const Payload& x) -> Payload { return -matrix_of(x); };
  ops.identity = Matrix(n);
  ops.metric = [](const Payload& x, const Payload& y) {
    return (matrix_of(x) - matrix_of(y)).norm();
  };
  ops.sampler = sampler_from([n, scale = s.scale](std::mt19937_64& rng) -> Payload {
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<double> a(n * n);
    for (double& v : a) v = scale * dist(rng);
    return Matrix(n, std::move(a));
  });
  ops.nth_root = [](const Payload& g, std::uint64_t k) -> Payload {
    return (1.0 / static_cast<double>(k)) * matrix_of(g);
  };
  ops.scalar_action = [](double a, const Payload& x) -> Payload { return a * matrix_of(x); };
  ops.real_power = [](const Payload& x, double t) -> Payload { return t * matrix_of(x); };
  ops.translation_constant = [](const Payload&) { return 1.0; };
  ops.validate = [n](const Payload& x) {
    if (matrix_of(x).dim() != n) throw ContractViolation("matrix has the wrong dimension");
  };
  ops.to_json = [](const Payload& x) -> nlohmann::json {
    const Matrix& m = matrix_of(x);
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  const std::string id = "matrix-add:" + std::to_string(n);
  return std::make_shared<const MetricGroupSpec>(
      id, "real " + std::to_string(n) + "x" + std::to_string(n) +
              " matrices under addition, Frobenius metric",
      std::move(ops),
      GroupTraits{.is_abelian = true, .claims_group_metric = true, .claims_divisible = true});
}

GroupPtr make_group(const std::string& name, SamplingOptions s) {
  if (name == "real-add") return make_real_additive(s);
  if (name == "pos-real-mul") return make_positive_reals(s);
  if (name == "complex-mul") return make_complex_multiplicative(s);
  if (name == "circle") return make_circle(s);
  if (name == "matrix-add") return make_matrix_additive(2, s);
  constexpr std::string_view kMatrix = "matrix-add:";
  if (name.starts_with(kMatrix)) {
    const std::string_view digits = std::string_view(name).substr(kMatrix.size());
    std::size_t n = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && end == digits.data() + digits.size() && n >= 1 && n <= 64) {
      return make_matrix_additive(n, s);
    }
    throw ConfigurationError("bad matrix dimension in group name '" + name + "'");
  }
  throw ConfigurationError("unknown group '" + name + "'");
}

const std::vector<std::string>& registered_group_names() {
  static const std::vector<std::string> kNames = {"circle", "complex-mul", "matrix-add:n",
                                                  "pos-real-mul", "real-add"};
  return kNames;
}

const std::vector<std::string>& default_group_names() {
  static const std::vector<std::string> kNames = {"circle", "complex-mul", "matrix-add:2",
                                                  "pos-real-mul", "real-add"};
  return kNames;
}

}  // namespace mgd
