#include "mgd/catalog.hpp"

#include "mgd/errors.hpp"

namespace mgd::cases {

namespace {

void require_matrix_group(const MetricGroupSpec& g) {
  if (!g.id().starts_with("matrix-add:")) {
    throw ContractViolation("expected a matrix group, got '" + g.id() + "'");
  }
}

void require_abelian(const MetricGroupSpec& g) {
  if (!g.traits().is_abelian) {
    throw ContractViolation("group '" + g.id() + "' is not Abelian");
  }
}

}  // namespace

Homomorphism sylvester(GroupPtr matrices, Matrix left, Matrix right, std::string label) {
  require_matrix_group(*matrices);
  GroupPtr g = matrices;
  const double lip = left.norm() + right.norm();
  return Homomorphism::primitive(
      matrices, matrices,
      [g, left = std::move(left), right = std::move(right)](const GroupElement& y) {
        const Matrix& m = matrix_of(y);
        return g->element(left * m + m * right);
      },
      std::move(label), lip);
}

Homomorphism power_map(GroupPtr group, std::uint64_t n) {
  require_abelian(*group);
  GroupPtr g = group;
  return Homomorphism::primitive(
      group, g, [g, n](const GroupElement& t) { return g->power(t, n); },
      "t^" + std::to_string(n));
}

Homomorphism linear_real(GroupPtr reals, double c) {
  GroupPtr g = reals;
  return Homomorphism::primitive(
      reals, g, [g, c](const GroupElement& t) { return g->element(c * real_of(t)); },
      std::to_string(c) + "*t", std::abs(c));
}

GroupFunction square_matrix(GroupPtr matrices) {
  require_matrix_group(*matrices);
  GroupPtr g = matrices;
  return GroupFunction(
      matrices, g,
      [g](const GroupElement& x) {
        const Matrix& m = matrix_of(x);
        return g->element(m * m);
      },
      "square-matrix");
}

SlopeFunction square_slope_right(const GroupFunction& square, const GroupElement& a) {
  GroupPtr g = square.domain_ptr();
  const Matrix A = matrix_of(a);
  return SlopeFunction(
      square, a, kSlopeRadius,
      [g, A](const GroupElement& x) { return sylvester(g, A, matrix_of(x), "AY+YX"); },
      "square-matrix/right");
}

SlopeFunction square_slope_left(const GroupFunction& square, const GroupElement& a) {
  GroupPtr g = square.domain_ptr();
  const Matrix A = matrix_of(a);
  return SlopeFunction(
      square, a, kSlopeRadius,
      [g, A](const GroupElement& x) { return sylvester(g, matrix_of(x), A, "XY+YA"); },
      "square-matrix/left");
}

SlopeFunction square_slope_perturbed(const GroupFunction& square, const GroupElement& a) {
  GroupPtr g = square.domain_ptr();
  const Matrix A = matrix_of(a);
  const std::size_t n = A.dim();
  return SlopeFunction(
      square, a, kSlopeRadius,
      [g, A, n](const GroupElement& x) {
        if (matrix_of(x) == A) return sylvester(g, A + Matrix::identity(n), A, "AY+YA+Y");
        return sylvester(g, A, matrix_of(x), "AY+YX");
      },
      "square-matrix/perturbed");
}

GroupFunction cube(GroupPtr group) {
  require_abelian(*group);
  GroupPtr g = group;
  return GroupFunction(group, g, [g](const GroupElement& x) { return g->power(x, 3); },
                       "cube-" + group->id());
}

SlopeFunction cube_slope_power(const GroupFunction& cube, const GroupElement& a) {
  GroupPtr g = cube.domain_ptr();
  const Homomorphism t3 = power_map(g, 3);
  return SlopeFunction(
      cube, a, kSlopeRadius, [t3](const GroupElement&) { return t3; }, "cube/power");
}

SlopeFunction cube_slope_adjoint(const GroupFunction& cube, const GroupElement& a) {
  GroupPtr g = cube.domain_ptr();
  const GroupElement a_inv = g->inverse(a);
  auto ad = [g, a, a_inv](const GroupElement& u) { return g->compose(g->compose(a, u), a_inv); };
  const Homomorphism h = Homomorphism::primitive(
      g, g,
      [g, ad](const GroupElement& t) { return g->compose(t, ad(g->compose(t, ad(t)))); },
      "t*ad_a(t*ad_a(t))");
  return SlopeFunction(
      cube, a, kSlopeRadius, [h](const GroupElement&) { return h; }, "cube/adjoint");
}

GroupFunction constant(GroupPtr domain, GroupPtr codomain) {
  const GroupElement e = codomain->identity();
  return GroupFunction(std::move(domain), std::move(codomain),
                       [e](const GroupElement&) { return e; }, "const");
}

SlopeFunction constant_slope(const GroupFunction& constant, const GroupElement& a) {
  const Homomorphism sigma =
      Homomorphism::trivial(constant.domain_ptr(), constant.codomain_ptr());
  return SlopeFunction(
      constant, a, kSlopeRadius, [sigma](const GroupElement&) { return sigma; }, "const/sigma");
}

GroupFunction identity(GroupPtr group) {
  GroupPtr g = group;
  return GroupFunction(group, g, [](const GroupElement& x) { return x; }, "identity");
}

SlopeFunction identity_slope(const GroupFunction& identity, const GroupElement& a) {
  const Homomorphism id = Homomorphism::identity(identity.domain_ptr());
  return SlopeFunction(
      identity, a, kSlopeRadius, [id](const GroupElement&) { return id; }, "identity/id");
}

GroupFunction scale_real(GroupPtr reals, double c) {
  GroupPtr g = reals;
  return GroupFunction(
      reals, g, [g, c](const GroupElement& x) { return g->element(c * real_of(x)); },
      std::to_string(c) + "*x");
}

SlopeFunction scale_real_slope(const GroupFunction& f, const GroupElement& a, double c) {
  const Homomorphism h = linear_real(f.domain_ptr(), c);
  return SlopeFunction(
      f, a, kSlopeRadius, [h](const GroupElement&) { return h; }, f.label() + "/linear");
}

const std::vector<std::string>& function_names() {
  static const std::vector<std::string> kNames = {"const", "cube-circle", "identity",
                                                  "square-matrix"};
  return kNames;
}

const std::vector<std::string>& slope_names() {
  static const std::vector<std::string> kNames = {
      "const/sigma",        "cube-circle/adjoint",   "cube-circle/power",
      "identity/id",        "square-matrix/left",    "square-matrix/perturbed",
      "square-matrix/right"};
  return kNames;
}

}  // namespace mgd::cases
