#pragma once

// Structure-constant tensors for binary and ternary superoperations, the
// Algebra bundle, multilinear evaluation and morphism predicates.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hly/error.hpp"
#include "hly/field.hpp"
#include "hly/report.hpp"
#include "hly/superspace.hpp"
#include "hly/sweep.hpp"

namespace hly {

namespace detail {

inline void require_even_output(const Grading& g, Parity expected, const Vector& v, const std::string& where) {
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero() && g[k] != expected)
      throw Error(ErrorCode::evenness_violation, where + " has a component of the wrong parity");
}

inline ScalarDomain domain_of(const std::vector<Vector>& vs) {
  ScalarDomain d = ScalarDomain::rational;
  for (const auto& v : vs) d = join(d, v.domain());
  return d;
}

}  // namespace detail

/// Binary operation given by the products of basis pairs: product(i, j) = e_i * e_j.
/// Parity-evenness (|e_i * e_j| = |e_i| + |e_j|) is enforced at construction.
class BinaryOp {
 public:
  BinaryOp() = default;
  BinaryOp(Grading grading, std::vector<Vector> products) : grading_(std::move(grading)), products_(std::move(products)) {
    const std::size_t n = grading_.size();
    if (products_.size() != n * n) throw Error(ErrorCode::dimension_mismatch, "binary table size");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vector& v = products_[i * n + j];
        if (v.size() != n) throw Error(ErrorCode::dimension_mismatch, "binary product length");
        detail::require_even_output(grading_, grading_[i] + grading_[j], v,
                                    "product (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
  }

  static BinaryOp zero(const Grading& grading) {
    const std::size_t n = grading.size();
    return BinaryOp(grading, std::vector<Vector>(n * n, Vector(n)));
  }
  static BinaryOp from_function(const Grading& grading, const std::function<Vector(std::size_t, std::size_t)>& f) {
    const std::size_t n = grading.size();
    std::vector<Vector> p;
    p.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p.push_back(f(i, j));
    return BinaryOp(grading, std::move(p));
  }

  std::size_t dim() const { return grading_.size(); }
  const Grading& grading() const { return grading_; }
  const Vector& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  /// Coefficient of e_k in e_i * e_j.
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return product(i, j)[k]; }
  const std::vector<Vector>& products() const { return products_; }

  bool is_zero() const {
    for (const auto& v : products_)
      if (!v.is_zero()) return false;
    return true;
  }
  ScalarDomain domain() const { return detail::domain_of(products_); }

  friend bool operator==(const BinaryOp& a, const BinaryOp& b) {
    return a.grading_ == b.grading_ && a.products_ == b.products_;
  }

 private:
  Grading grading_;
  std::vector<Vector> products_;
};

/// Ternary operation given by product(i, j, k) = {e_i, e_j, e_k}.
class TernaryOp {
 public:
  TernaryOp() = default;
  TernaryOp(Grading grading, std::vector<Vector> products) : grading_(std::move(grading)), products_(std::move(products)) {
    const std::size_t n = grading_.size();
    if (products_.size() != n * n * n) throw Error(ErrorCode::dimension_mismatch, "ternary table size");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const Vector& v = products_[(i * n + j) * n + k];
          if (v.size() != n) throw Error(ErrorCode::dimension_mismatch, "ternary product length");
          detail::require_even_output(grading_, grading_[i] + grading_[j] + grading_[k], v,
                                      "product (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                          std::to_string(k) + ")");
        }
  }

  static TernaryOp zero(const Grading& grading) {
    const std::size_t n = grading.size();
    return TernaryOp(grading, std::vector<Vector>(n * n * n, Vector(n)));
  }
  static TernaryOp from_function(const Grading& grading,
                                 const std::function<Vector(std::size_t, std::size_t, std::size_t)>& f) {
    const std::size_t n = grading.size();
    std::vector<Vector> p;
    p.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) p.push_back(f(i, j, k));
    return TernaryOp(grading, std::move(p));
  }

  std::size_t dim() const { return grading_.size(); }
  const Grading& grading() const { return grading_; }
  const Vector& product(std::size_t i, std::size_t j, std::size_t k) const {
    return products_[(i * dim() + j) * dim() + k];
  }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const { return product(i, j, k)[l]; }
  const std::vector<Vector>& products() const { return products_; }

  bool is_zero() const {
    for (const auto& v : products_)
      if (!v.is_zero()) return false;
    return true;
  }
  ScalarDomain domain() const { return detail::domain_of(products_); }

  friend bool operator==(const TernaryOp& a, const TernaryOp& b) {
    return a.grading_ == b.grading_ && a.products_ == b.products_;
  }

 private:
  Grading grading_;
  std::vector<Vector> products_;
};

/// (L, *, {,,}, alpha) over one scalar domain. Either operation may be absent,
/// which covers Hom-Lie superalgebras (no ternary) and Hom-supertriple
/// systems (no binary). Immutable; the with_* members return modified copies.
class Algebra {
 public:
  Algebra(std::string name, SuperBasis basis, std::optional<BinaryOp> binary, std::optional<TernaryOp> ternary,
          std::optional<LinearMap> alpha = std::nullopt, std::optional<ScalarDomain> domain = std::nullopt)
      : name_(std::move(name)),
        basis_(std::move(basis)),
        binary_(std::move(binary)),
        ternary_(std::move(ternary)),
        alpha_(alpha ? std::move(*alpha) : LinearMap::identity(basis_.grading())) {
    if (!binary_ && !ternary_) throw Error(ErrorCode::validation, "at least one operation required");
    if (binary_) require_same_grading(binary_->grading(), basis_.grading(), "binary operation");
    if (ternary_) require_same_grading(ternary_->grading(), basis_.grading(), "ternary operation");
    require_same_grading(alpha_.grading(), basis_.grading(), "twisting map");
    ScalarDomain content = alpha_.domain();
    if (binary_) content = join(content, binary_->domain());
    if (ternary_) content = join(content, ternary_->domain());
    if (domain && *domain == ScalarDomain::rational && content == ScalarDomain::rational_function)
      throw Error(ErrorCode::domain, "algebra '" + name_ + "' declared rational but has l-dependent constants");
    domain_ = domain ? *domain : content;
  }

  const std::string& name() const { return name_; }
  const SuperBasis& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  const Grading& grading() const { return basis_.grading(); }
  const std::optional<BinaryOp>& binary() const { return binary_; }
  const std::optional<TernaryOp>& ternary() const { return ternary_; }
  const LinearMap& alpha() const { return alpha_; }
  ScalarDomain domain() const { return domain_; }

  const BinaryOp& require_binary(const std::string& who) const {
    if (!binary_) throw Error(ErrorCode::missing_operation, who + " needs a binary operation on '" + name_ + "'");
    return *binary_;
  }
  const TernaryOp& require_ternary(const std::string& who) const {
    if (!ternary_) throw Error(ErrorCode::missing_operation, who + " needs a ternary operation on '" + name_ + "'");
    return *ternary_;
  }

  Algebra with_name(std::string name) const {
    Algebra a = *this;
    a.name_ = std::move(name);
    return a;
  }
  Algebra with_binary(std::optional<BinaryOp> op) const {
    return Algebra(name_, basis_, std::move(op), ternary_, alpha_, widened(op_domain(op)));
  }
  Algebra with_ternary(std::optional<TernaryOp> op) const {
    return Algebra(name_, basis_, binary_, std::move(op), alpha_, widened(op_domain(op)));
  }
  Algebra with_alpha(LinearMap alpha) const {
    ScalarDomain d = widened(alpha.domain());
    return Algebra(name_, basis_, binary_, ternary_, std::move(alpha), d);
  }

 private:
  template <class Op>
  static ScalarDomain op_domain(const std::optional<Op>& op) {
    return op ? op->domain() : ScalarDomain::rational;
  }
  ScalarDomain widened(ScalarDomain d) const { return join(domain_, d); }

  std::string name_;
  SuperBasis basis_;
  std::optional<BinaryOp> binary_;
  std::optional<TernaryOp> ternary_;
  LinearMap alpha_;
  ScalarDomain domain_ = ScalarDomain::rational;
};

namespace detail {

inline void accumulate(Vector& out, const Scalar& c, const Vector& v) {
  if (c.is_one()) out += v;
  else out.add_scaled(c, v);
}

}  // namespace detail

/// Bilinear extension of the structure constants.
inline Vector eval2(const BinaryOp& op, const Vector& x, const Vector& y) {
  const std::size_t n = op.dim();
  if (x.size() != n || y.size() != n) throw Error(ErrorCode::dimension_mismatch, "eval2 argument size");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Vector& p = op.product(i, j);
      if (p.is_zero()) continue;
      detail::accumulate(out, x[i] * y[j], p);
    }
  }
  return out;
}

/// Trilinear extension of the structure constants.
inline Vector eval3(const TernaryOp& op, const Vector& x, const Vector& y, const Vector& z) {
  const std::size_t n = op.dim();
  if (x.size() != n || y.size() != n || z.size() != n)
    throw Error(ErrorCode::dimension_mismatch, "eval3 argument size");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (z[k].is_zero()) continue;
        const Vector& p = op.product(i, j, k);
        if (p.is_zero()) continue;
        detail::accumulate(out, xy * z[k], p);
      }
    }
  }
  return out;
}

/// (x, y) -> f(x * y)
inline BinaryOp outer2(const LinearMap& f, const BinaryOp& op) {
  require_same_grading(f.grading(), op.grading(), "outer2");
  std::vector<Vector> p;
  p.reserve(op.products().size());
  for (const auto& v : op.products()) p.push_back(map_apply(f, v));
  return BinaryOp(op.grading(), std::move(p));
}

/// (x, y, z) -> f({x, y, z})
inline TernaryOp outer3(const LinearMap& f, const TernaryOp& op) {
  require_same_grading(f.grading(), op.grading(), "outer3");
  std::vector<Vector> p;
  p.reserve(op.products().size());
  for (const auto& v : op.products()) p.push_back(map_apply(f, v));
  return TernaryOp(op.grading(), std::move(p));
}

inline bool op_equal(const BinaryOp& a, const BinaryOp& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::dimension_mismatch, "op_equal: dimensions differ");
  return a == b;
}
inline bool op_equal(const TernaryOp& a, const TernaryOp& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::dimension_mismatch, "op_equal: dimensions differ");
  return a == b;
}

inline BinaryOp evaluate_at(const BinaryOp& op, const Rational& point) {
  std::vector<Vector> p;
  for (const auto& v : op.products()) p.push_back(evaluate_at(v, point));
  return BinaryOp(op.grading(), std::move(p));
}
inline TernaryOp evaluate_at(const TernaryOp& op, const Rational& point) {
  std::vector<Vector> p;
  for (const auto& v : op.products()) p.push_back(evaluate_at(v, point));
  return TernaryOp(op.grading(), std::move(p));
}

/// Substitutes l = point everywhere; the result lives over Q.
inline Algebra evaluate_at(const Algebra& alg, const Rational& point) {
  std::optional<BinaryOp> b;
  std::optional<TernaryOp> t;
  if (alg.binary()) b = evaluate_at(*alg.binary(), point);
  if (alg.ternary()) t = evaluate_at(*alg.ternary(), point);
  return Algebra(alg.name() + "@l=" + point.str(), alg.basis(), std::move(b), std::move(t),
                 evaluate_at(alg.alpha(), point), ScalarDomain::rational);
}

namespace detail {

// f(e_i * e_j) - f(e_i) * f(e_j) and the ternary analogue over all basis tuples.
inline Report morphism_report(const LinearMap& f, const Algebra& alg) {
  require_same_grading(f.grading(), alg.grading(), "morphism check");
  const std::size_t n = alg.dim();
  Report rep;
  rep.algebra_name = alg.name();
  rep.basis_names = alg.basis().names();
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(f.column(i));
  if (const auto& b = alg.binary()) {
    rep.identities_checked.push_back(IdentityId::MULT2);
    for (auto& [t, r] : sweep(n, 2, [&](const std::vector<std::size_t>& t) {
           return map_apply(f, b->product(t[0], t[1])) - eval2(*b, images[t[0]], images[t[1]]);
         }))
      rep.violations.push_back({IdentityId::MULT2, std::move(t), std::move(r)});
  }
  if (const auto& d = alg.ternary()) {
    rep.identities_checked.push_back(IdentityId::MULT3);
    for (auto& [t, r] : sweep(n, 3, [&](const std::vector<std::size_t>& t) {
           return map_apply(f, d->product(t[0], t[1], t[2])) - eval3(*d, images[t[0]], images[t[1]], images[t[2]]);
         }))
      rep.violations.push_back({IdentityId::MULT3, std::move(t), std::move(r)});
  }
  return rep;
}

}  // namespace detail

/// Checks that the twisting map is a morphism of every present operation.
inline Report is_multiplicative(const Algebra& alg) {
  Report r = detail::morphism_report(alg.alpha(), alg);
  r.profile = "mult";
  return r;
}

/// Checks that beta is a morphism of every present operation of alg.
inline Report is_endomorphism(const LinearMap& beta, const Algebra& alg) {
  Report r = detail::morphism_report(beta, alg);
  r.profile = "endomorphism";
  return r;
}

}  // namespace hly
