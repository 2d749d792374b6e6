#include <gtest/gtest.h>

#include <random>

#include "mgd/catalog.hpp"
#include "mgd/derivative.hpp"
#include "mgd/errors.hpp"
#include "mgd/groups.hpp"
#include "oracle.hpp"

using namespace mgd;

namespace {

const std::vector<double> kRadii = {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};

oracle::Dense dense(const GroupElement& x) {
  const auto e = matrix_of(x).entries();
  return {e.begin(), e.end()};
}

GroupElement from_dense(const GroupPtr& m, const oracle::Dense& a) {
  return m->element(Matrix(oracle::side(a), a));
}

}  // namespace

TEST(SquareSlope, FactorizationIsExact) {
  const auto m = make_matrix_additive(3);
  const auto sq = cases::square_matrix(m);
  const auto a = m->sample(1, 1).front();
  for (const auto& s : {cases::square_slope_right(sq, a), cases::square_slope_left(sq, a)}) {
    const auto rep = check_differentiable(sq, s, kRadii, 4, 500);
    EXPECT_TRUE(rep.passed) << s.label();
    EXPECT_LT(rep.max_factorization_residual, 1e-13);
  }
}

TEST(SquareSlope, ResidualAgainstLoopOracle) {
  const auto m = make_matrix_additive(2);
  const auto sq = cases::square_matrix(m);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 500; ++i) {
    const auto x = oracle::uniform(rng, 2);
    const auto a = oracle::uniform(rng, 2);
    const auto lhs = oracle::add(oracle::mul(x, x), oracle::mul(a, a), -1.0);
    const auto s = cases::square_slope_right(sq, from_dense(m, a));
    const auto rhs = dense(s.slope_at(from_dense(m, x))(from_dense(m, oracle::add(x, a, -1.0))));
    EXPECT_LT(oracle::frob_diff(lhs, rhs), 1e-14);
  }
}

TEST(SquareSlope, DerivativeValues) {
  const auto m = make_matrix_additive(2);
  const auto sq = cases::square_matrix(m);
  std::mt19937_64 rng(4);
  const auto a = oracle::uniform(rng, 2);
  const auto d = derivative_at(cases::square_slope_left(sq, from_dense(m, a)));
  const auto at_identity = derivative_at(cases::square_slope_right(sq, m->element(Matrix::identity(2))));
  for (int i = 0; i < 50; ++i) {
    const auto y = oracle::uniform(rng, 2);
    EXPECT_LT(oracle::frob_diff(dense(d(from_dense(m, y))), oracle::sylvester(a, y)), 1e-15);
    EXPECT_EQ(dense(at_identity(from_dense(m, y))), oracle::scaled(2.0, y));
  }
}

TEST(ConstantAndIdentity, TrivialCases) {
  const auto r = make_real_additive();
  const auto a = r->element(0.7);
  const auto c = cases::constant(r, r);
  const auto cs = cases::constant_slope(c, a);
  EXPECT_TRUE(check_differentiable(c, cs, kRadii, 1, 100).passed);
  EXPECT_EQ(derivative_at(cs).kind(), Homomorphism::Kind::primitive);
  EXPECT_EQ(real_of(derivative_at(cs)(r->element(3.0))), 0.0);
  const auto mod = continuity_from_differentiability(c, cs, kRadii, 1, 100);
  EXPECT_TRUE(mod.passed);
  EXPECT_EQ(mod.max_violation, 0.0);
  const auto id = cases::identity(r);
  EXPECT_TRUE(check_differentiable(id, cases::identity_slope(id, a), kRadii, 1, 100).passed);
}

TEST(CubeCircle, PowerAndAdjointFormsFactor) {
  const auto c = make_circle();
  const auto cube = cases::cube(c);
  for (const auto& a : c->sample(3, 10)) {
    const auto p = cases::cube_slope_power(cube, a);
    const auto q = cases::cube_slope_adjoint(cube, a);
    EXPECT_TRUE(check_differentiable(cube, p, kRadii, 2, 200).passed);
    EXPECT_TRUE(check_differentiable(cube, q, kRadii, 2, 200).passed);
    for (const auto& t : c->sample(5, 50)) {
      EXPECT_LT(c->distance(derivative_at(p)(t), derivative_at(q)(t)), 1e-12);
      EXPECT_LT(c->distance(derivative_at(p)(t), c->element(canonical_angle(3 * real_of(t)))), 1e-12);
    }
  }
}

TEST(CheckDifferentiable, RejectsWrongSlope) {
  const auto m = make_matrix_additive(2);
  const auto sq = cases::square_matrix(m);
  const auto a = m->sample(1, 1).front();
  const SlopeFunction wrong(sq, a, 1.0,
                            [m](const GroupElement&) { return Homomorphism::identity(m); }, "Y");
  const auto rep = check_differentiable(sq, wrong, kRadii, 1, 100);
  EXPECT_FALSE(rep.passed);
  EXPECT_FALSE(rep.witness.is_null());
}

TEST(CheckDifferentiable, ContractErrors) {
  const auto m = make_matrix_additive(2);
  const auto sq = cases::square_matrix(m);
  const auto a = m->sample(1, 1).front();
  const auto s = cases::square_slope_right(sq, a);
  EXPECT_THROW(check_differentiable(sq, s, {1e-3, 1e-1}, 1, 10), ContractViolation);
  EXPECT_THROW(check_differentiable(sq, s, {2.0}, 1, 10), ContractViolation);
  EXPECT_THROW(check_differentiable(cases::cube(make_circle()), s, kRadii, 1, 10), ContractViolation);
  EXPECT_THROW(SlopeFunction(sq, a, 0.0, [m](const GroupElement&) { return Homomorphism::identity(m); }, "x"),
               ContractViolation);
}

TEST(Uniqueness, VariantsAgreeAndPerturbedFails) {
  const auto m = make_matrix_additive(2);
  const auto sq = cases::square_matrix(m);
  const auto a = m->sample(1, 1).front();
  const auto z = m->sample(2, 1).front();
  const auto probe = make_probe_set(*m, 3);
  const auto ok = uniqueness_probe(cases::square_slope_right(sq, a), cases::square_slope_left(sq, a), z,
                                   1 << 16, probe);
  EXPECT_TRUE(ok.passed);
  EXPECT_LT(ok.details["metric_at_base"].get<double>(), 1e-10);
  const auto same = cases::square_slope_right(sq, a);
  EXPECT_TRUE(uniqueness_probe(same, same, z, 1 << 16, probe).passed);
  const auto bad = uniqueness_probe(same, cases::square_slope_perturbed(sq, a), z, 1 << 16, probe);
  EXPECT_FALSE(bad.passed);
  EXPECT_GT(bad.details["metric_at_base"].get<double>(), 0.1);
}

TEST(Uniqueness, NeedsDivisibleDomain) {
  const auto c = make_complex_multiplicative();
  const auto f = cases::identity(c);
  const auto s = cases::identity_slope(f, c->identity());
  EXPECT_THROW(uniqueness_probe(s, s, c->identity(), 4, make_probe_set(*c, 1)), UnsupportedOperation);
}

TEST(ContinuityFromDifferentiability, ModulusShrinksLinearly) {
  const auto m = make_matrix_additive(2);
  const auto sq = cases::square_matrix(m);
  const auto a = m->element(Matrix(2, {0.5, 0.1, -0.3, 0.2}));
  const auto rep = continuity_from_differentiability(sq, cases::square_slope_right(sq, a), kRadii, 3, 300);
  EXPECT_TRUE(rep.passed);
  // ||X^2 - A^2|| <= (||A|| + ||X||) ||X - A||
  const double bound = (2 * matrix_of(a).norm() + 1e-6) * 1e-6;
  EXPECT_LE(rep.max_violation, bound);
}

TEST(SlopeSum, MatrixAndLine) {
  const auto m = make_matrix_additive(2);
  const auto sq = cases::square_matrix(m);
  std::mt19937_64 rng(12);
  const auto a = oracle::uniform(rng, 2);
  const auto s = cases::square_slope_right(sq, from_dense(m, a));
  const auto sum = slope_sum(s, s);
  EXPECT_TRUE(check_differentiable(sum.function(), sum, kRadii, 1, 200).passed);
  const auto y = oracle::uniform(rng, 2);
  EXPECT_LT(oracle::frob_diff(dense(derivative_at(sum)(from_dense(m, y))),
                              oracle::scaled(2.0, oracle::sylvester(a, y))),
            1e-14);

  const auto r = make_real_additive();
  const auto p = r->element(1.3);
  const auto two = cases::scale_real_slope(cases::scale_real(r, 2.0), p, 2.0);
  const auto three = cases::scale_real_slope(cases::scale_real(r, 3.0), p, 3.0);
  EXPECT_DOUBLE_EQ(real_of(derivative_at(slope_sum(two, three))(r->element(0.4))), 2.0);

  const auto c = cases::constant(m, m);
  const auto with_const = slope_sum(s, cases::constant_slope(c, from_dense(m, a)));
  EXPECT_EQ(dense(derivative_at(with_const)(from_dense(m, y))), dense(derivative_at(s)(from_dense(m, y))));
}

TEST(SlopeScale, Alphas) {
  const auto m = make_matrix_additive(2);
  const auto sq = cases::square_matrix(m);
  std::mt19937_64 rng(13);
  const auto a = oracle::uniform(rng, 2);
  const auto s = cases::square_slope_right(sq, from_dense(m, a));
  for (double alpha : {0.0, 1.0, 2.0, -3.5}) {
    const auto sc = slope_scale(alpha, s);
    EXPECT_TRUE(check_differentiable(sc.function(), sc, kRadii, 1, 200).passed) << alpha;
    const auto y = oracle::uniform(rng, 2);
    EXPECT_LT(oracle::frob_diff(dense(derivative_at(sc)(from_dense(m, y))),
                                oracle::scaled(alpha, oracle::sylvester(a, y))),
              1e-14);
  }
  EXPECT_THROW(slope_scale(2.0, cases::cube_slope_power(cases::cube(make_circle()), make_circle()->identity())),
               UnsupportedOperation);
}

TEST(SlopeChain, QuarticMatchesOracle) {
  const auto m = make_matrix_additive(2);
  const auto sq = cases::square_matrix(m);
  std::mt19937_64 rng(14);
  const auto a = oracle::uniform(rng, 2);
  const auto ea = from_dense(m, a);
  const auto chain = slope_chain(cases::square_slope_right(sq, sq(ea)), cases::square_slope_right(sq, ea));
  EXPECT_TRUE(check_differentiable(chain.function(), chain, kRadii, 1, 200).passed);
  const auto a2 = oracle::mul(a, a);
  for (int i = 0; i < 20; ++i) {
    const auto y = oracle::uniform(rng, 2);
    const auto d = oracle::sylvester(a, y);
    const auto expected = oracle::add(oracle::mul(a2, d), oracle::mul(d, a2));
    EXPECT_LT(oracle::frob_diff(dense(derivative_at(chain)(from_dense(m, y))), expected), 1e-13);
  }
  EXPECT_THROW(slope_chain(cases::square_slope_right(sq, ea), cases::square_slope_right(sq, ea)),
               ContractViolation);
}

TEST(SlopeChain, IdentityOuterLeavesInnerUnchanged) {
  const auto m = make_matrix_additive(2);
  const auto sq = cases::square_matrix(m);
  const auto a = m->sample(4, 1).front();
  const auto id = cases::identity(m);
  const auto inner = cases::square_slope_right(sq, a);
  const auto chain = slope_chain(cases::identity_slope(id, sq(a)), inner);
  for (const auto& x : sample_near(*m, a, 0.1, 2, 10)) {
    for (const auto& y : m->sample(3, 5)) {
      EXPECT_EQ(matrix_of(chain.slope_at(x)(y)), matrix_of(inner.slope_at(x)(y)));
    }
  }
}

TEST(SlopeChain, CircleNinthPower) {
  const auto c = make_circle();
  const auto cube = cases::cube(c);
  const auto a = c->sample(6, 1).front();
  const auto chain = slope_chain(cases::cube_slope_power(cube, cube(a)), cases::cube_slope_power(cube, a));
  EXPECT_TRUE(check_differentiable(chain.function(), chain, kRadii, 1, 200).passed);
  for (const auto& t : c->sample(7, 100)) {
    EXPECT_LT(c->distance(derivative_at(chain)(t), c->element(canonical_angle(9 * real_of(t)))), 1e-12);
  }
}

TEST(FrechetOracle, ExactExpansions) {
  const auto m = make_matrix_additive(2);
  const auto sq = cases::square_matrix(m);
  std::mt19937_64 rng(15);
  const auto a = oracle::uniform(rng, 2);
  const auto ea = from_dense(m, a);
  EXPECT_EQ(matrix_of(frechet_fd_oracle(sq, ea, m->identity(), 1e-2)), Matrix(2));
  const auto y = oracle::uniform(rng, 2);
  const double y2 = oracle::frob(oracle::mul(y, y));
  for (double h : {1e-1, 1e-2}) {
    const auto q = dense(frechet_fd_oracle(sq, ea, from_dense(m, y), h));
    EXPECT_NEAR(oracle::frob_diff(q, oracle::sylvester(a, y)) / h, y2, 1e-9 * y2);
  }
  const Matrix C(2, {1, 2, 3, 4});
  const GroupFunction lin(m, m, [m, C](const GroupElement& x) { return m->element(C * matrix_of(x)); }, "CX");
  for (double h : {1e-1, 1e-3, 1e-6}) {
    const auto q = dense(frechet_fd_oracle(lin, ea, from_dense(m, y), h));
    EXPECT_LT(oracle::frob_diff(q, dense(m->element(C * matrix_of(from_dense(m, y))))), 1e-8);
  }
  EXPECT_THROW(frechet_fd_oracle(sq, ea, ea, 0.0), ContractViolation);
}

TEST(FunctionCombinators, Pointwise) {
  const auto r = make_real_additive();
  const auto f = cases::scale_real(r, 2.0);
  const auto g = cases::scale_real(r, 3.0);
  const auto x = r->element(1.5);
  EXPECT_EQ(real_of(function_sum(f, g)(x)), 7.5);
  EXPECT_EQ(real_of(function_scale(-2.0, f)(x)), -6.0);
  EXPECT_EQ(real_of(function_compose(g, f)(x)), 9.0);
}
