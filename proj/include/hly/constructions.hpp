#pragma once

// Algebra-producing procedures: Yau twisting by an endomorphism, nth-derived
// algebras, and the passages between binary, ternary and binary-ternary
// structures.

#include <cstdint>
#include <memory>
#include <string>

#include "hly/axioms.hpp"
#include "hly/error.hpp"
#include "hly/tensorops.hpp"

namespace hly {

namespace detail {

inline std::vector<Vector> units(std::size_t n) {
  std::vector<Vector> u;
  for (std::size_t i = 0; i < n; ++i) u.push_back(Vector::unit(n, i));
  return u;
}

inline std::uint64_t derived_exponent_check(unsigned n) {
  if (n > 32) throw Error(ErrorCode::bad_arity, "derived order above 32 is not supported");
  return std::uint64_t{1} << n;
}

}  // namespace detail

/// Twists alg by beta: x*y -> beta^n(x*y), {x,y,z} -> beta^{2n}{x,y,z},
/// alpha -> beta^n alpha. Refuses beta unless it is an even endomorphism
/// of both operations commuting with alpha.
inline Algebra yau_twist(const Algebra& alg, const LinearMap& beta, int n) {
  if (n < 1) throw Error(ErrorCode::bad_arity, "twist order must be at least 1");
  require_same_grading(beta.grading(), alg.grading(), "yau_twist");
  Report endo = is_endomorphism(beta, alg);
  if (!endo.passed()) {
    const std::string msg = "map is not an endomorphism of '" + alg.name() + "' (" +
                            std::to_string(endo.violations.size()) + " violations)";
    throw PreconditionError(ErrorCode::not_endomorphism, msg, std::make_shared<const Report>(std::move(endo)));
  }
  if (!maps_commute(beta, alg.alpha()))
    throw PreconditionError(ErrorCode::maps_do_not_commute, "map does not commute with the twisting map", nullptr);

  const LinearMap bn = map_power(beta, static_cast<std::uint64_t>(n));
  std::optional<BinaryOp> b;
  std::optional<TernaryOp> t;
  if (alg.binary()) b = outer2(bn, *alg.binary());
  if (alg.ternary()) t = outer3(map_compose(bn, bn), *alg.ternary());
  return Algebra(alg.name() + "_twisted", alg.basis(), std::move(b), std::move(t), map_compose(bn, alg.alpha()));
}

/// nth-derived binary Hom-superalgebra (A, alpha^{2^n - 1} o *, alpha^{2^n}).
inline Algebra derived2(const Algebra& alg, unsigned n) {
  const BinaryOp& op = alg.require_binary("derived2");
  if (n == 0) return alg.with_ternary(std::nullopt);
  const std::uint64_t p = detail::derived_exponent_check(n);
  return Algebra(alg.name() + "^(" + std::to_string(n) + ")", alg.basis(), outer2(map_power(alg.alpha(), p - 1), op),
                 std::nullopt, map_power(alg.alpha(), p));
}

/// nth-derived ternary Hom-superalgebra (A, alpha^{2^{n+1} - 2} o {,,}, alpha^{2^n}).
inline Algebra derived3(const Algebra& alg, unsigned n) {
  const TernaryOp& op = alg.require_ternary("derived3");
  if (n == 0) return alg.with_binary(std::nullopt);
  const std::uint64_t p = detail::derived_exponent_check(n);
  return Algebra(alg.name() + "^(" + std::to_string(n) + ")", alg.basis(), std::nullopt,
                 outer3(map_power(alg.alpha(), 2 * p - 2), op), map_power(alg.alpha(), p));
}

/// nth-derived binary-ternary Hom-superalgebra; both exponent rules, shared twist alpha^{2^n}.
inline Algebra derived_bt(const Algebra& alg, unsigned n) {
  const BinaryOp& b = alg.require_binary("derived_bt");
  const TernaryOp& t = alg.require_ternary("derived_bt");
  if (n == 0) return alg;
  const std::uint64_t p = detail::derived_exponent_check(n);
  const LinearMap& a = alg.alpha();
  return Algebra(alg.name() + "^(" + std::to_string(n) + ")", alg.basis(), outer2(map_power(a, p - 1), b),
                 outer3(map_power(a, 2 * p - 2), t), map_power(a, p));
}

/// [x,y] = x*y - (-1)^{|x||y|} y*x; ternary and twist are kept.
inline Algebra supercommutator(const Algebra& alg) {
  const BinaryOp& op = alg.require_binary("supercommutator");
  const Grading& g = alg.grading();
  BinaryOp br = BinaryOp::from_function(g, [&](std::size_t i, std::size_t j) {
    Vector r = op.product(i, j);
    return r.add_signed(-koszul(bit(g[i]) * bit(g[j])), op.product(j, i));
  });
  return alg.with_name(alg.name() + "_comm").with_binary(std::move(br));
}

/// Hom-supertriple system of a Hom-superalgebra:
/// {x,y,z} = [[x,y], a(z)] - as(x,y,z) + (-1)^{|x||y|} as(y,x,z),
/// with [,] the supercommutator and as the Hom-superassociator.
inline Algebra sts_from_alg(const Algebra& alg) {
  const BinaryOp& op = alg.require_binary("sts_from_alg");
  const Grading& g = alg.grading();
  Evaluator e(alg);
  const auto u = detail::units(alg.dim());
  auto comm = [&](const Vector& x, Parity px, const Vector& y, Parity py) {
    return eval2(op, x, y).add_signed(-koszul(bit(px) * bit(py)), eval2(op, y, x));
  };
  TernaryOp tri = TernaryOp::from_function(g, [&](std::size_t i, std::size_t j, std::size_t k) {
    const Element x{&u[i], g[i]}, y{&u[j], g[j]}, z{&u[k], g[k]};
    Vector r = comm(comm(u[i], g[i], u[j], g[j]), g[i] + g[j], e.alpha(u[k]), g[k]);
    r -= residual::hom_assoc(e, x, y, z);
    r.add_signed(koszul(bit(g[i]) * bit(g[j])), residual::hom_assoc(e, y, x, z));
    return r;
  });
  return Algebra(alg.name() + "_sts", alg.basis(), std::nullopt, std::move(tri), alg.alpha(), alg.domain());
}

/// Adds {x,y,z} = [[x,y], a(z)] to a Hom-Lie superalgebra.
inline Algebra hly_from_homlie(const Algebra& alg) {
  const BinaryOp& op = alg.require_binary("hly_from_homlie");
  Report r = check_hom_lie(alg);
  if (!r.passed())
    throw PreconditionError(ErrorCode::not_hom_lie, "'" + alg.name() + "' is not a multiplicative Hom-Lie superalgebra",
                            std::make_shared<const Report>(std::move(r)));
  std::vector<Vector> images;
  for (std::size_t k = 0; k < alg.dim(); ++k) images.push_back(alg.alpha().column(k));
  TernaryOp tri = TernaryOp::from_function(alg.grading(), [&](std::size_t i, std::size_t j, std::size_t k) {
    return eval2(op, op.product(i, j), images[k]);
  });
  return Algebra(alg.name() + "_hly", alg.basis(), op, std::move(tri), alg.alpha(), alg.domain());
}

/// Lie-Yamaguti ternary of a Malcev superalgebra:
/// {x,y,z} = x*(y*z) - (-1)^{|x||y|} y*(x*z) + (x*y)*z.
inline Algebra ly_from_malcev(const Algebra& alg) {
  const BinaryOp& op = alg.require_binary("ly_from_malcev");
  if (!alg.alpha().is_identity())
    throw PreconditionError(ErrorCode::non_identity_twist, "the Malcev construction is untwisted", nullptr);
  const Grading& g = alg.grading();
  const auto u = detail::units(alg.dim());
  TernaryOp tri = TernaryOp::from_function(g, [&](std::size_t i, std::size_t j, std::size_t k) {
    Vector r = eval2(op, u[i], op.product(j, k));
    r.add_signed(-koszul(bit(g[i]) * bit(g[j])), eval2(op, u[j], op.product(i, k)));
    return r += eval2(op, op.product(i, j), u[k]);
  });
  return Algebra(alg.name() + "_ly", alg.basis(), op, std::move(tri), std::nullopt, alg.domain());
}

}  // namespace hly
