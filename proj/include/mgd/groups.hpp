#pragma once

#include <string>
#include <vector>

#include "mgd/group.hpp"

namespace mgd {

/// Additive groups sample N(0, scale) values; multiplicative groups sample
/// exp of such values so payloads stay away from zero.
struct SamplingOptions {
  double scale = 1.0;
};

/// (R, +) with |x - y|. Divisible, with scalar action.
GroupPtr make_real_additive(SamplingOptions s = {});
/// (R_{>0}, *) with |x - y|. Divisible by real roots.
GroupPtr make_positive_reals(SamplingOptions s = {});
/// (C*, *) with |x - y|. Group metric, not flagged divisible.
GroupPtr make_complex_multiplicative(SamplingOptions s = {});
/// (S^1, *) stored as angles in (-pi, pi], chord metric |e^{ia} - e^{ib}|,
/// principal-branch roots e^{i arg / n}.
GroupPtr make_circle(SamplingOptions s = {});
/// (M_n(R), +) with the Frobenius norm of the difference. n >= 1.
GroupPtr make_matrix_additive(std::size_t n, SamplingOptions s = {});

/// Canonical representative of an angle in (-pi, pi].
double canonical_angle(double theta);

/// Resolves "real-add", "pos-real-mul", "complex-mul", "circle" and
/// "matrix-add:<n>" (plain "matrix-add" means n = 2). Throws
/// ConfigurationError naming the key when it is unknown.
GroupPtr make_group(const std::string& name, SamplingOptions s = {});

/// Registry keys in alphabetical order.
const std::vector<std::string>& registered_group_names();

/// The groups a default suite run covers.
const std::vector<std::string>& default_group_names();

}  // namespace mgd
