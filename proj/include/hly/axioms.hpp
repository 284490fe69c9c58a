#pragma once

// Exact checkers for the graded identity systems. Every identity is evaluated
// on all basis tuples, which suffices by multilinearity; a tuple is a
// violation when its residual is not identically zero.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hly/error.hpp"
#include "hly/report.hpp"
#include "hly/sweep.hpp"
#include "hly/tensorops.hpp"

namespace hly {

/// A homogeneous element: coordinates plus its parity.
struct Element {
  const Vector* v;
  Parity p;

  const Vector& operator*() const { return *v; }
  int bit() const { return hly::bit(p); }
};

/// Evaluates operations and twisting maps of one algebra. The twist defaults
/// to the algebra's alpha; passing identity_twist gives the untwisted forms.
class Evaluator {
 public:
  struct IdentityTwist {};
  static constexpr IdentityTwist identity_twist{};

  explicit Evaluator(const Algebra& alg) : Evaluator(alg, alg.alpha()) {}
  Evaluator(const Algebra& alg, IdentityTwist) : Evaluator(alg, LinearMap::identity(alg.grading())) {}
  Evaluator(const Algebra& alg, LinearMap twist) : alg_(&alg), twist_(std::move(twist)) {
    require_same_grading(twist_.grading(), alg.grading(), "twist");
    twist_is_identity_ = twist_.is_identity();
    twist2_ = map_compose(twist_, twist_);
    for (std::size_t i = 0; i < alg.dim(); ++i) units_.push_back(Vector::unit(alg.dim(), i));
  }

  const Algebra& algebra() const { return *alg_; }
  std::size_t dim() const { return alg_->dim(); }
  Element unit(std::size_t i) const { return {&units_[i], alg_->grading()[i]}; }

  Vector mul(const Vector& x, const Vector& y) const { return eval2(alg_->require_binary("evaluation"), x, y); }
  Vector tri(const Vector& x, const Vector& y, const Vector& z) const {
    return eval3(alg_->require_ternary("evaluation"), x, y, z);
  }
  Vector alpha(const Vector& x) const { return twist_is_identity_ ? x : map_apply(twist_, x); }
  Vector alpha2(const Vector& x) const { return twist_is_identity_ ? x : map_apply(twist2_, x); }

 private:
  const Algebra* alg_;
  LinearMap twist_;
  LinearMap twist2_;
  bool twist_is_identity_ = false;
  std::vector<Vector> units_;
};

namespace residual {

inline Vector skew2(const Evaluator& e, Element x, Element y) {
  Vector r = e.mul(*x, *y);
  return r.add_signed(koszul(x.bit() * y.bit()), e.mul(*y, *x));
}

inline Vector skew3(const Evaluator& e, Element x, Element y, Element z) {
  Vector r = e.tri(*x, *y, *z);
  return r.add_signed(koszul(x.bit() * y.bit()), e.tri(*y, *x, *z));
}

/// (x*y)*a(z) + (-1)^{|x|(|y|+|z|)} (y*z)*a(x) + (-1)^{|z|(|x|+|y|)} (z*x)*a(y)
inline Vector hom_jacobi(const Evaluator& e, Element x, Element y, Element z) {
  Vector r = e.mul(e.mul(*x, *y), e.alpha(*z));
  r.add_signed(koszul(x.bit() * (y.bit() + z.bit())), e.mul(e.mul(*y, *z), e.alpha(*x)));
  r.add_signed(koszul(z.bit() * (x.bit() + y.bit())), e.mul(e.mul(*z, *x), e.alpha(*y)));
  return r;
}

/// (x*y)*a(z) - a(x)*(y*z)
inline Vector hom_assoc(const Evaluator& e, Element x, Element y, Element z) {
  return e.mul(e.mul(*x, *y), e.alpha(*z)) - e.mul(e.alpha(*x), e.mul(*y, *z));
}

/// {x,y,z} + (-1)^{|x|(|y|+|z|)} {y,z,x} + (-1)^{|z|(|x|+|y|)} {z,x,y}
inline Vector ternary_cyclic(const Evaluator& e, Element x, Element y, Element z) {
  Vector r = e.tri(*x, *y, *z);
  r.add_signed(koszul(x.bit() * (y.bit() + z.bit())), e.tri(*y, *z, *x));
  r.add_signed(koszul(z.bit() * (x.bit() + y.bit())), e.tri(*z, *x, *y));
  return r;
}

/// Ternary Hom-Nambu residual with twist b (b = alpha, or alpha^2 for SHLY8):
/// {b x, b y, {u,v,w}} - {{x,y,u}, b v, b w} - s1 {b u, {x,y,v}, b w} - s2 {b u, b v, {x,y,w}}
inline Vector nambu(const Evaluator& e, Element x, Element y, Element u, Element v, Element w, bool squared) {
  auto b = [&](const Vector& a) { return squared ? e.alpha2(a) : e.alpha(a); };
  const int xy = x.bit() + y.bit();
  Vector r = e.tri(b(*x), b(*y), e.tri(*u, *v, *w));
  r -= e.tri(e.tri(*x, *y, *u), b(*v), b(*w));
  r.add_signed(-koszul(u.bit() * xy), e.tri(b(*u), e.tri(*x, *y, *v), b(*w)));
  r.add_signed(-koszul(xy * (u.bit() + v.bit())), e.tri(b(*u), b(*v), e.tri(*x, *y, *w)));
  return r;
}

/// a(x*y) - a(x)*a(y)
inline Vector mult2(const Evaluator& e, Element x, Element y) {
  return e.alpha(e.mul(*x, *y)) - e.mul(e.alpha(*x), e.alpha(*y));
}

inline Vector mult3(const Evaluator& e, Element x, Element y, Element z) {
  return e.alpha(e.tri(*x, *y, *z)) - e.tri(e.alpha(*x), e.alpha(*y), e.alpha(*z));
}

/// Cyclic sum over (x,y,z) with weights (-1)^{|x||z|} of (x*y)*a(z) + {x,y,z}.
inline Vector shly5(const Evaluator& e, Element x, Element y, Element z) {
  auto term = [&](Element a, Element b, Element c) {
    return e.mul(e.mul(*a, *b), e.alpha(*c)) + e.tri(*a, *b, *c);
  };
  Vector r = term(x, y, z);
  if (koszul(x.bit() * z.bit()) < 0) r = -r;
  r.add_signed(koszul(y.bit() * x.bit()), term(y, z, x));
  r.add_signed(koszul(z.bit() * y.bit()), term(z, x, y));
  return r;
}

/// Cyclic sum over (x,y,z) with weights (-1)^{|x||z|} of {x*y, a(z), a(u)}.
inline Vector shly6(const Evaluator& e, Element x, Element y, Element z, Element u) {
  Vector au = e.alpha(*u);
  auto term = [&](Element a, Element b, Element c) { return e.tri(e.mul(*a, *b), e.alpha(*c), au); };
  Vector r = term(x, y, z);
  if (koszul(x.bit() * z.bit()) < 0) r = -r;
  r.add_signed(koszul(y.bit() * x.bit()), term(y, z, x));
  r.add_signed(koszul(z.bit() * y.bit()), term(z, x, y));
  return r;
}

/// {a x, a y, u*v} - {x,y,u}*a^2(v) - (-1)^{|u|(|x|+|y|)} a^2(u)*{x,y,v}
inline Vector shly7(const Evaluator& e, Element x, Element y, Element u, Element v) {
  Vector r = e.tri(e.alpha(*x), e.alpha(*y), e.mul(*u, *v));
  r -= e.mul(e.tri(*x, *y, *u), e.alpha2(*v));
  r.add_signed(-koszul(u.bit() * (x.bit() + y.bit())), e.mul(e.alpha2(*u), e.tri(*x, *y, *v)));
  return r;
}

/// {x,y,z} + (-1)^{|x|(|y|+|z|)}{y,z,x} + (-1)^{|z|(|x|+|y|)}{z,x,y} + J(x,y,z),
/// with J the (twisted) super-Jacobian.
inline Vector sly3(const Evaluator& e, Element x, Element y, Element z) {
  return ternary_cyclic(e, x, y, z) + hom_jacobi(e, x, y, z);
}

/// {x*y,z,u} + (-1)^{|x|(|y|+|z|)}{y*z,x,u} + (-1)^{|z|(|x|+|y|)}{z*x,y,u}
inline Vector sly4(const Evaluator& e, Element x, Element y, Element z, Element u) {
  Vector r = e.tri(e.mul(*x, *y), *z, *u);
  r.add_signed(koszul(x.bit() * (y.bit() + z.bit())), e.tri(e.mul(*y, *z), *x, *u));
  r.add_signed(koszul(z.bit() * (x.bit() + y.bit())), e.tri(e.mul(*z, *x), *y, *u));
  return r;
}

/// {x,y,u*v} - {x,y,u}*v - (-1)^{|u|(|x|+|y|)} u*{x,y,v}
inline Vector sly5(const Evaluator& e, Element x, Element y, Element u, Element v) {
  Vector r = e.tri(*x, *y, e.mul(*u, *v));
  r -= e.mul(e.tri(*x, *y, *u), *v);
  r.add_signed(-koszul(u.bit() * (x.bit() + y.bit())), e.mul(*u, e.tri(*x, *y, *v)));
  return r;
}

/// {x,y,{u,v,w}} - {{x,y,u},v,w} - s1 {u,{x,y,v},w} - s2 {u,v,{x,y,w}}
inline Vector sly6(const Evaluator& e, Element x, Element y, Element u, Element v, Element w) {
  const int xy = x.bit() + y.bit();
  Vector r = e.tri(*x, *y, e.tri(*u, *v, *w));
  r -= e.tri(e.tri(*x, *y, *u), *v, *w);
  r.add_signed(-koszul(u.bit() * xy), e.tri(*u, e.tri(*x, *y, *v), *w));
  r.add_signed(-koszul(xy * (u.bit() + v.bit())), e.tri(*u, *v, e.tri(*x, *y, *w)));
  return r;
}

}  // namespace residual

/// Number of arguments of an identity's residual.
constexpr std::size_t arity(IdentityId id) {
  switch (id) {
    case IdentityId::SLY1: case IdentityId::SHLY1: case IdentityId::SHLY3:
    case IdentityId::SKEW2: case IdentityId::MULT2: case IdentityId::TABLE2:
      return 2;
    case IdentityId::SLY4: case IdentityId::SLY5: case IdentityId::SHLY6: case IdentityId::SHLY7:
      return 4;
    case IdentityId::SLY6: case IdentityId::SHLY8: case IdentityId::NAMBU:
      return 5;
    default:
      return 3;
  }
}

/// Residual of one identity on homogeneous arguments. SLY3 uses the
/// evaluator's twist in its Jacobian term; the checkers run the SLY family
/// with identity_twist.
inline Vector identity_residual(const Evaluator& e, IdentityId id, std::span<const Element> a) {
  if (a.size() != arity(id)) throw Error(ErrorCode::bad_arity, std::string(to_string(id)) + ": wrong argument count");
  switch (id) {
    case IdentityId::SLY1: case IdentityId::SHLY3: case IdentityId::SKEW2:
      return residual::skew2(e, a[0], a[1]);
    case IdentityId::SLY2: case IdentityId::SHLY4: case IdentityId::SKEW3: case IdentityId::STS_I:
      return residual::skew3(e, a[0], a[1], a[2]);
    case IdentityId::SLY3: return residual::sly3(e, a[0], a[1], a[2]);
    case IdentityId::SLY4: return residual::sly4(e, a[0], a[1], a[2], a[3]);
    case IdentityId::SLY5: return residual::sly5(e, a[0], a[1], a[2], a[3]);
    case IdentityId::SLY6: return residual::sly6(e, a[0], a[1], a[2], a[3], a[4]);
    case IdentityId::SHLY1: case IdentityId::MULT2: return residual::mult2(e, a[0], a[1]);
    case IdentityId::SHLY2: case IdentityId::MULT3: return residual::mult3(e, a[0], a[1], a[2]);
    case IdentityId::SHLY5: return residual::shly5(e, a[0], a[1], a[2]);
    case IdentityId::SHLY6: return residual::shly6(e, a[0], a[1], a[2], a[3]);
    case IdentityId::SHLY7: return residual::shly7(e, a[0], a[1], a[2], a[3]);
    case IdentityId::SHLY8: return residual::nambu(e, a[0], a[1], a[2], a[3], a[4], true);
    case IdentityId::NAMBU: return residual::nambu(e, a[0], a[1], a[2], a[3], a[4], false);
    case IdentityId::HOM_JACOBI: return residual::hom_jacobi(e, a[0], a[1], a[2]);
    case IdentityId::HOM_ASSOC: return residual::hom_assoc(e, a[0], a[1], a[2]);
    case IdentityId::STS_II: return residual::ternary_cyclic(e, a[0], a[1], a[2]);
    case IdentityId::TABLE2: case IdentityId::TABLE3: break;
  }
  throw Error(ErrorCode::validation, std::string(to_string(id)) + " is not an algebraic identity");
}

/// Residual on arbitrary homogeneous vectors, e.g. for multilinearity tests.
inline Vector identity_residual(const Algebra& alg, IdentityId id, std::span<const Vector> args, bool untwisted = false) {
  Evaluator e = untwisted ? Evaluator(alg, Evaluator::identity_twist) : Evaluator(alg);
  std::vector<Element> el;
  for (const auto& v : args) {
    auto p = parity_of(v, alg.grading());
    if (!p) throw Error(ErrorCode::validation, "identity arguments must be homogeneous");
    el.push_back({&v, *p});
  }
  return identity_residual(e, id, el);
}

namespace detail {

inline bool uses_binary(IdentityId id) {
  switch (id) {
    case IdentityId::SLY2: case IdentityId::SHLY2: case IdentityId::SHLY4: case IdentityId::SKEW3:
    case IdentityId::STS_I: case IdentityId::STS_II: case IdentityId::NAMBU: case IdentityId::MULT3:
    case IdentityId::SLY6: case IdentityId::SHLY8:
      return false;
    default:
      return true;
  }
}
inline bool uses_ternary(IdentityId id) {
  switch (id) {
    case IdentityId::SLY1: case IdentityId::SHLY1: case IdentityId::SHLY3: case IdentityId::SKEW2:
    case IdentityId::HOM_JACOBI: case IdentityId::HOM_ASSOC: case IdentityId::MULT2:
      return false;
    default:
      return true;
  }
}

inline void sweep_identity(const Evaluator& e, IdentityId id, Report& rep) {
  rep.identities_checked.push_back(id);
  const std::size_t k = arity(id);
  auto found = sweep(e.dim(), k, [&](const std::vector<std::size_t>& t) {
    std::vector<Element> el;
    el.reserve(k);
    for (auto i : t) el.push_back(e.unit(i));
    return identity_residual(e, id, el);
  });
  for (auto& [t, r] : found) rep.violations.push_back({id, std::move(t), std::move(r)});
}

}  // namespace detail

/// Sweeps the listed identities in order. With untwisted set, the twisting map
/// is replaced by the identity.
inline Report check_identities(const Algebra& alg, std::span<const IdentityId> ids, std::string_view profile,
                               bool untwisted = false) {
  for (auto id : ids) {
    if (detail::uses_binary(id)) alg.require_binary(std::string(to_string(id)));
    if (detail::uses_ternary(id)) alg.require_ternary(std::string(to_string(id)));
  }
  Evaluator e = untwisted ? Evaluator(alg, Evaluator::identity_twist) : Evaluator(alg);
  Report rep;
  rep.algebra_name = alg.name();
  rep.profile = std::string(profile);
  rep.basis_names = alg.basis().names();
  for (auto id : ids) detail::sweep_identity(e, id, rep);
  return rep;
}

inline Report check_skew2(const Algebra& alg) {
  const IdentityId ids[] = {IdentityId::SKEW2};
  return check_identities(alg, ids, "skew2");
}
inline Report check_skew3(const Algebra& alg) {
  const IdentityId ids[] = {IdentityId::SKEW3};
  return check_identities(alg, ids, "skew3");
}
inline Report check_hom_jacobi(const Algebra& alg) {
  const IdentityId ids[] = {IdentityId::HOM_JACOBI};
  return check_identities(alg, ids, "hom-jacobi");
}
inline Report check_hom_assoc(const Algebra& alg) {
  const IdentityId ids[] = {IdentityId::HOM_ASSOC};
  return check_identities(alg, ids, "hom-assoc");
}
inline Report check_sts(const Algebra& alg) {
  const IdentityId ids[] = {IdentityId::STS_I, IdentityId::STS_II};
  return check_identities(alg, ids, "sts");
}
inline Report check_nambu(const Algebra& alg) {
  const IdentityId ids[] = {IdentityId::NAMBU};
  return check_identities(alg, ids, "nambu");
}
/// Hom-Lie supertriple system: supertriple axioms plus the ternary Hom-Nambu identity.
inline Report check_hlts(const Algebra& alg) {
  const IdentityId ids[] = {IdentityId::STS_I, IdentityId::STS_II, IdentityId::NAMBU};
  return check_identities(alg, ids, "hlts");
}
/// Skew-supersymmetry and the Hom-super-Jacobi identity, plus multiplicativity.
inline Report check_hom_lie(const Algebra& alg) {
  const IdentityId ids[] = {IdentityId::SKEW2, IdentityId::HOM_JACOBI, IdentityId::MULT2};
  return check_identities(alg, ids, "hom-lie");
}
/// Lie superalgebra: skew and super-Jacobi with the twist forced to the identity.
inline Report check_lie(const Algebra& alg) {
  const IdentityId ids[] = {IdentityId::SKEW2, IdentityId::HOM_JACOBI};
  return check_identities(alg, ids, "lie", true);
}
/// All eight Hom-Lie-Yamaguti identities.
inline Report check_hly(const Algebra& alg) {
  const IdentityId ids[] = {IdentityId::SHLY1, IdentityId::SHLY2, IdentityId::SHLY3, IdentityId::SHLY4,
                            IdentityId::SHLY5, IdentityId::SHLY6, IdentityId::SHLY7, IdentityId::SHLY8};
  return check_identities(alg, ids, "hly");
}
/// The six untwisted Lie-Yamaguti identities in their printed form.
inline Report check_ly(const Algebra& alg) {
  const IdentityId ids[] = {IdentityId::SLY1, IdentityId::SLY2, IdentityId::SLY3,
                            IdentityId::SLY4, IdentityId::SLY5, IdentityId::SLY6};
  return check_identities(alg, ids, "ly", true);
}

enum class Profile { hly, ly, hom_lie, lie, hom_assoc, sts, hlts, nambu, mult };

inline constexpr std::pair<Profile, std::string_view> profile_names[] = {
    {Profile::hly, "hly"},           {Profile::ly, "ly"},   {Profile::hom_lie, "hom-lie"},
    {Profile::lie, "lie"},           {Profile::hom_assoc, "hom-assoc"}, {Profile::sts, "sts"},
    {Profile::hlts, "hlts"},         {Profile::nambu, "nambu"}, {Profile::mult, "mult"},
};

constexpr std::string_view to_string(Profile p) {
  for (const auto& [k, v] : profile_names)
    if (k == p) return v;
  return "?";
}
inline std::optional<Profile> parse_profile(std::string_view s) {
  for (const auto& [k, v] : profile_names)
    if (v == s) return k;
  return std::nullopt;
}

/// Runs a named checker profile. hom-assoc and hlts include multiplicativity
/// of the present operations, since every Hom-superalgebra here is multiplicative.
inline Report check_profile(const Algebra& alg, Profile p) {
  Report r;
  switch (p) {
    case Profile::hly: r = check_hly(alg); break;
    case Profile::ly: r = check_ly(alg); break;
    case Profile::hom_lie: r = check_hom_lie(alg); break;
    case Profile::lie: r = check_lie(alg); break;
    case Profile::hom_assoc: {
      const IdentityId ids[] = {IdentityId::HOM_ASSOC, IdentityId::MULT2};
      r = check_identities(alg, ids, "hom-assoc");
      break;
    }
    case Profile::sts: r = check_sts(alg); break;
    case Profile::hlts: {
      const IdentityId ids[] = {IdentityId::STS_I, IdentityId::STS_II, IdentityId::NAMBU, IdentityId::MULT3};
      r = check_identities(alg, ids, "hlts");
      break;
    }
    case Profile::nambu: r = check_nambu(alg); break;
    case Profile::mult: r = is_multiplicative(alg); break;
  }
  r.profile = std::string(to_string(p));
  return r;
}

}  // namespace hly
