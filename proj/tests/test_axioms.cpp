#include <random>

#include <gtest/gtest.h>

#include "hly/axioms.hpp"
#include "hly/catalog.hpp"
#include "hly/constructions.hpp"

using namespace hly;

namespace {

const Scalar l = Scalar::indeterminate();
enum { H, X, Y, F, G };

Vector u(std::size_t i, std::size_t n = 5) { return Vector::unit(n, i); }

Algebra ternary_only(const Algebra& a, LinearMap alpha) {
  return Algebra(a.name() + "_t", a.basis(), std::nullopt, a.ternary(), std::move(alpha));
}

}  // namespace

TEST(Skew2, Examples) {
  EXPECT_TRUE(check_skew2(instantiate_algebra("osp12")).passed());
  const SuperBasis b({{"e0", Parity::even}, {"e1", Parity::even}, {"e2", Parity::even}, {"e3", Parity::even}});
  EXPECT_TRUE(check_skew2(Algebra("zero", b, BinaryOp::zero(b.grading()), std::nullopt)).passed());

  std::vector<Vector> p(16, Vector(4));
  p[1 * 4 + 2] = Vector::unit(4, 3);
  p[2 * 4 + 1] = Vector::unit(4, 3);
  const Report r = check_skew2(Algebra("sym", b, BinaryOp(b.grading(), p), std::nullopt));
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.violations.front().tuple, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(r.violations.front().residual, Scalar(2) * Vector::unit(4, 3));
}

TEST(Skew2, OddSquaresAreConsistent) {
  // [F,F] = 2Y: the residual [F,F] + (-1)^{1*1}[F,F] is zero.
  const Algebra a = instantiate_algebra("osp12");
  const Vector fv = u(F);
  const Element fe{&fv, Parity::odd};
  EXPECT_TRUE(residual::skew2(Evaluator(a), fe, fe).is_zero());
}

TEST(Skew3, Examples) {
  EXPECT_TRUE(check_skew3(instantiate_algebra("sly31")).passed());
  EXPECT_TRUE(check_skew3(instantiate_algebra("sly31_printed")).passed());
  EXPECT_TRUE(check_skew3(instantiate_algebra("sly12_lambda")).passed());
  EXPECT_TRUE(check_skew3(instantiate_algebra("sly12_lambda_printed")).passed());
  const Algebra a = instantiate_algebra("sly31");
  EXPECT_TRUE(check_skew3(a.with_ternary(TernaryOp::zero(a.grading()))).passed());
}

TEST(HomJacobi, Examples) {
  EXPECT_TRUE(check_hom_jacobi(instantiate_algebra("osp12")).passed());
  EXPECT_TRUE(check_hom_jacobi(instantiate_algebra("osp12_lambda")).passed());
}

TEST(HomJacobi, LambdaBracketUntwistedFails) {
  const Algebra a = instantiate_algebra("osp12_lambda");
  const Algebra untwisted = a.with_alpha(LinearMap::identity(a.grading()));
  const Report r = check_hom_jacobi(untwisted);
  ASSERT_FALSE(r.passed());
  for (const auto& v : r.violations) {
    std::size_t nonzero = 0;
    for (std::size_t k = 0; k < 5; ++k) nonzero += v.residual[k].is_zero() ? 0 : 1;
    EXPECT_EQ(nonzero, 1u);
  }
  // By hand: [[H,Y],X] + [[Y,X],H] + [[X,H],Y] = (-2/l^2)[Y,X] - [H,H] - 2l^2[X,Y] = (2/l^2 - 2l^2) H.
  const Violation* v = r.find(IdentityId::HOM_JACOBI, {H, Y, X});
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->residual, (Scalar(2) / (l * l) - Scalar(2) * l * l) * u(H));
}

TEST(HomAssoc, Examples) {
  EXPECT_TRUE(check_hom_assoc(instantiate_algebra("m11_assoc")).passed());
  const Algebra a = instantiate_algebra("osp12");
  EXPECT_TRUE(check_hom_assoc(a.with_binary(BinaryOp::zero(a.grading()))).passed());
  const Report r = check_hom_assoc(a);
  ASSERT_FALSE(r.passed());
  // [[H,X],Y] - [H,[X,Y]] = 2[X,Y] - [H,H] = 2H
  const Violation* v = r.find(IdentityId::HOM_ASSOC, {H, X, Y});
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->residual, Scalar(2) * u(H));
}

TEST(Sts, Examples) {
  EXPECT_TRUE(check_sts(sts_from_alg(instantiate_algebra("osp12"))).passed());
  const Algebra a = instantiate_algebra("sly31");
  EXPECT_TRUE(check_sts(ternary_only(a, a.alpha()).with_ternary(TernaryOp::zero(a.grading()))).passed());
}

TEST(Sts, Sly31TernaryAloneFailsTheCyclicIdentity) {
  // Without the binary Jacobian term the cyclic sum on (e3,e4,e4) is
  // {e3,e4,e4} + {e4,e4,e3} - {e4,e3,e4}; the skew axiom still holds.
  const Algebra a = instantiate_algebra("sly31");
  const Report r = check_sts(ternary_only(a, a.alpha()));
  EXPECT_EQ(r.count(IdentityId::STS_I), 0u);
  EXPECT_EQ(r.count(IdentityId::STS_II), 3u);
  const TernaryOp& t = *a.ternary();
  const Vector expected = t.product(2, 3, 3) + t.product(3, 3, 2) - t.product(3, 2, 3);
  const Violation* v = r.find(IdentityId::STS_II, {2, 3, 3});
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->residual, expected);
}

TEST(Nambu, ZeroTernaryPasses) {
  const Algebra a = instantiate_algebra("sly31");
  EXPECT_TRUE(check_nambu(ternary_only(a, a.alpha()).with_ternary(TernaryOp::zero(a.grading()))).passed());
}

TEST(Nambu, BinaryZeroedHlyWithSquaredTwist) {
  const Algebra a = instantiate_algebra("sly12_lambda");
  EXPECT_TRUE(check_hlts(ternary_only(a, map_compose(a.alpha(), a.alpha()))).passed());
}

TEST(Nambu, RandomEvenTernaryFails) {
  const SuperBasis b({{"p", Parity::even}, {"q", Parity::odd}});
  std::mt19937 rng(20261014);
  std::uniform_int_distribution<int> coeff(-3, 3);
  const TernaryOp t = TernaryOp::from_function(b.grading(), [&](std::size_t i, std::size_t j, std::size_t k) {
    Vector v(2);
    const std::size_t out = (i + j + k) % 2 == 0 ? 0 : 1;
    const int c = coeff(rng);
    v.add_scaled(Scalar(c == 0 ? 1 : c), Vector::unit(2, out));
    return v;
  });
  const Report r = check_nambu(Algebra("random", b, std::nullopt, t));
  ASSERT_FALSE(r.passed());
  const auto& w = r.violations.front();
  EXPECT_EQ(w.tuple.size(), 5u);
  EXPECT_FALSE(w.residual.is_zero());
}

TEST(Hly, Examples) {
  EXPECT_TRUE(check_hly(instantiate_algebra("sly12_lambda")).passed());
  const Algebra s = instantiate_algebra("sly31");
  const LinearMap beta = instantiate_map("alpha1", {{"a", "1"}, {"b", "1"}, {"c", "3"}});
  EXPECT_TRUE(check_hly(yau_twist(s, beta, 1)).passed());
}

TEST(Hly, AgreesWithLyAtIdentityTwist) {
  for (const char* name : {"sly31", "sly31_printed"}) {
    const Algebra a = instantiate_algebra(name);
    ASSERT_TRUE(a.alpha().is_identity());
    EXPECT_EQ(check_hly(a).passed(), check_ly(a).passed()) << name;
  }
  const Algebra at1 = evaluate_at(instantiate_algebra("sly12_lambda"), Rational(1));
  EXPECT_TRUE(check_hly(at1).passed());
  EXPECT_TRUE(check_ly(at1).passed());
}

TEST(Hly, MissingOperation) {
  try {
    (void)check_hly(instantiate_algebra("osp12"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::missing_operation);
  }
  EXPECT_THROW((void)check_sts(instantiate_algebra("osp12")), Error);
}

TEST(Ly, Examples) {
  EXPECT_TRUE(check_ly(instantiate_algebra("sly31")).passed());
  EXPECT_TRUE(check_ly(evaluate_at(instantiate_algebra("sly12_lambda"), Rational(1))).passed());
  const Report r = check_ly(instantiate_algebra("sly12_lambda"));
  ASSERT_FALSE(r.passed());
  const Violation* v = r.find(IdentityId::SLY3, {H, Y, X});
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->residual, (Scalar(2) * (Scalar(1) - l.pow(4)) / (l * l)) * u(H));
  EXPECT_EQ(v->residual[H].str(), "(2-2*l^4)/l^2");
}

TEST(Ly, Sly4ResidualOnHYXG) {
  // {[H,Y],X,G} + {[Y,X],H,G} + {[X,H],Y,G}
  //   = (-2/l^2){Y,X,G} - {H,H,G} - 2l^2{X,Y,G}
  //   = (-2/l^2)[-H, lG] - 0 - 2l^2[H, lG] = 2G - 2l^4 G.
  const Report r = check_ly(instantiate_algebra("sly12_lambda"));
  const Violation* v = r.find(IdentityId::SLY4, {H, Y, X, G});
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->residual, (Scalar(2) - Scalar(2) * l.pow(4)) * u(G));
  EXPECT_EQ(scalar_eval(v->residual[G], Rational(1)), Rational(0));
  EXPECT_EQ(scalar_eval(v->residual[G], Rational(-1)), Rational(0));
}

TEST(Ly, MinusOneFailsOnOddArguments) {
  // At l = -1 the bracket is the osp(1,2) bracket post-composed with the
  // parity involution; on (X,Y,F), with X,Y even, the Jacobian is 2F.
  const Algebra a = evaluate_at(instantiate_algebra("sly12_lambda"), Rational(-1));
  const Report r = check_ly(a);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.find(IdentityId::SLY3, {H, Y, X}), nullptr);
  const Violation* v = r.find(IdentityId::SLY3, {X, Y, F});
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->residual, Scalar(2) * u(F));
}

TEST(Ly, PrintedSly31Witnesses) {
  const Report r = check_ly(instantiate_algebra("sly31_printed"));
  EXPECT_EQ(r.violations.size(), 14u);
  EXPECT_EQ(r.count(IdentityId::SLY1), 0u);
  EXPECT_EQ(r.count(IdentityId::SLY2), 0u);
}

TEST(Residual, ArityAndTableIds) {
  const Algebra a = instantiate_algebra("sly31");
  const std::vector<Vector> two{Vector::unit(4, 0), Vector::unit(4, 1)};
  try {
    (void)identity_residual(a, IdentityId::SLY6, two);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::bad_arity);
  }
  try {
    (void)identity_residual(a, IdentityId::TABLE2, two);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::validation);
  }
  const std::vector<Vector> mixed{Vector::unit(4, 0) + Vector::unit(4, 3), Vector::unit(4, 1)};
  EXPECT_THROW((void)identity_residual(a, IdentityId::SKEW2, mixed), Error);
}

TEST(Report, Consistency) {
  const Report r = check_ly(instantiate_algebra("sly12_lambda"));
  EXPECT_EQ(r.passed(), r.violations.empty());
  const Algebra a = instantiate_algebra("sly12_lambda");
  for (std::size_t i = 0; i < r.violations.size(); i += 37) {
    const auto& v = r.violations[i];
    std::vector<Vector> args;
    for (auto k : v.tuple) args.push_back(u(k));
    EXPECT_EQ(identity_residual(a, v.identity, args, true), v.residual);
    EXPECT_FALSE(v.residual.is_zero());
  }
  for (std::size_t i = 1; i < r.violations.size(); ++i) {
    const auto& p = r.violations[i - 1];
    const auto& c = r.violations[i];
    if (p.identity == c.identity) { EXPECT_LT(p.tuple, c.tuple); }
  }
}

TEST(Profiles, ParseAndRun) {
  for (const auto& [p, name] : profile_names) EXPECT_EQ(parse_profile(name), p);
  EXPECT_FALSE(parse_profile("bogus").has_value());
  EXPECT_TRUE(check_profile(instantiate_algebra("m11_assoc"), Profile::hom_assoc).passed());
  EXPECT_TRUE(check_profile(instantiate_algebra("osp12_lambda"), Profile::mult).passed());
  EXPECT_EQ(check_profile(instantiate_algebra("osp12"), Profile::lie).profile, "lie");
}

TEST(Reductions, BinaryZeroMatchesHltsWithSquaredTwist) {
  for (const char* name : {"sly12_lambda", "sly31", "sly31_printed", "sly12_lambda_printed"}) {
    const Algebra a = instantiate_algebra(name);
    const Algebra z = a.with_binary(BinaryOp::zero(a.grading()));
    const bool hly = check_hly(z).passed();
    const bool hlts = check_profile(ternary_only(a, map_compose(a.alpha(), a.alpha())), Profile::hlts).passed() &&
                      is_multiplicative(z).passed();
    EXPECT_EQ(hly, hlts) << name;
  }
}

TEST(Reductions, TernaryZeroMatchesHomLie) {
  const Algebra good = instantiate_algebra("osp12_lambda");
  const Algebra bad = good.with_alpha(LinearMap::identity(good.grading()));
  for (const Algebra& a : {good, bad}) {
    const Algebra z = a.with_ternary(TernaryOp::zero(a.grading()));
    EXPECT_EQ(check_hly(z).passed(), check_hom_lie(a).passed()) << a.name();
  }
  EXPECT_TRUE(check_hom_lie(good).passed());
  EXPECT_FALSE(check_hom_lie(bad).passed());
}
