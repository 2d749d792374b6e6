#pragma once

// Worked differentiable functions and their slope functions.

#include <string>
#include <vector>

#include "mgd/derivative.hpp"

namespace mgd::cases {

/// Y -> L Y + Y R on a matrix group.
Homomorphism sylvester(GroupPtr matrices, Matrix left, Matrix right, std::string label);

/// t -> t^n by repeated composition; a homomorphism on Abelian groups only.
Homomorphism power_map(GroupPtr group, std::uint64_t n);

/// t -> c t on (R, +).
Homomorphism linear_real(GroupPtr reals, double c);

/// X -> X^2 on a matrix group.
GroupFunction square_matrix(GroupPtr matrices);
/// Slope Y -> A Y + Y X, exact on the whole group.
SlopeFunction square_slope_right(const GroupFunction& square, const GroupElement& a);
/// Slope Y -> X Y + Y A; a second valid factorization with the same value at A.
SlopeFunction square_slope_left(const GroupFunction& square, const GroupElement& a);
/// square_slope_right, except at X = A where it returns Y -> A Y + Y A + Y.
/// Still factors X^2 (the increment at A is zero) but is discontinuous at A.
SlopeFunction square_slope_perturbed(const GroupFunction& square, const GroupElement& a);

/// x -> x^3 on an Abelian group.
GroupFunction cube(GroupPtr group);
/// Slope t -> t^3, constant in x.
SlopeFunction cube_slope_power(const GroupFunction& cube, const GroupElement& a);
/// Slope t -> t * ad_a(t * ad_a(t)) with ad_a(u) = a u a^{-1}, which reduces
/// to t^3 on Abelian groups.
SlopeFunction cube_slope_adjoint(const GroupFunction& cube, const GroupElement& a);

/// x -> e_H.
GroupFunction constant(GroupPtr domain, GroupPtr codomain);
/// Slope constantly sigma.
SlopeFunction constant_slope(const GroupFunction& constant, const GroupElement& a);

/// x -> x.
GroupFunction identity(GroupPtr group);
/// Slope constantly the identity homomorphism.
SlopeFunction identity_slope(const GroupFunction& identity, const GroupElement& a);

/// x -> c x on (R, +) and its constant slope t -> c t.
GroupFunction scale_real(GroupPtr reals, double c);
SlopeFunction scale_real_slope(const GroupFunction& f, const GroupElement& a, double c);

/// Default neighborhood radius of the shipped slopes; their identities hold
/// globally, so any positive value is valid.
inline constexpr double kSlopeRadius = 1.0;

/// Registered function and slope names in alphabetical order.
const std::vector<std::string>& function_names();
const std::vector<std::string>& slope_names();

}  // namespace mgd::cases
