#pragma once

// Z2-graded vector spaces with a named homogeneous basis, coordinate vectors
// and even (grading-preserving) linear maps.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hly/error.hpp"
#include "hly/field.hpp"

namespace hly {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

constexpr int bit(Parity p) { return static_cast<int>(p); }
constexpr Parity operator+(Parity a, Parity b) { return static_cast<Parity>(bit(a) ^ bit(b)); }

/// (-1)^exponent
constexpr int koszul(int exponent) { return (exponent & 1) ? -1 : 1; }

using Grading = std::vector<Parity>;

struct BasisEntry {
  std::string name;
  Parity parity = Parity::even;
};

class SuperBasis {
 public:
  SuperBasis() = default;
  explicit SuperBasis(std::vector<BasisEntry> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw Error(ErrorCode::validation, "basis must be nonempty");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      const auto& name = entries_[i].name;
      if (name.empty()) throw Error(ErrorCode::validation, "basis names must be nonempty");
      if (!index_.emplace(name, i).second) throw Error(ErrorCode::validation, "duplicate basis name '" + name + "'");
      grading_.push_back(entries_[i].parity);
    }
  }

  std::size_t size() const { return entries_.size(); }
  const BasisEntry& operator[](std::size_t i) const { return entries_[i]; }
  const std::string& name(std::size_t i) const { return entries_[i].name; }
  Parity parity(std::size_t i) const { return entries_[i].parity; }
  const Grading& grading() const { return grading_; }
  const std::vector<BasisEntry>& entries() const { return entries_; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.name);
    return out;
  }

  friend bool operator==(const SuperBasis& a, const SuperBasis& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a.entries_[i].name != b.entries_[i].name || a.entries_[i].parity != b.entries_[i].parity) return false;
    return true;
  }

 private:
  std::vector<BasisEntry> entries_;
  Grading grading_;
  std::unordered_map<std::string, std::size_t> index_;
};

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n) : coords_(n) {}
  explicit Vector(std::vector<Scalar> coords) : coords_(std::move(coords)) {}

  static Vector unit(std::size_t n, std::size_t i) {
    Vector v(n);
    v.coords_[i] = Scalar(1);
    return v;
  }

  std::size_t size() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Scalar>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (!c.is_zero()) return false;
    return true;
  }

  /// this += c * v
  Vector& add_scaled(const Scalar& c, const Vector& v) {
    check_size(v);
    if (c.is_zero()) return *this;
    for (std::size_t i = 0; i < coords_.size(); ++i)
      if (!v.coords_[i].is_zero()) coords_[i] += c * v.coords_[i];
    return *this;
  }
  Vector& add_signed(int sign, const Vector& v) {
    check_size(v);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (v.coords_[i].is_zero()) continue;
      if (sign > 0) coords_[i] += v.coords_[i];
      else coords_[i] -= v.coords_[i];
    }
    return *this;
  }

  Vector& operator+=(const Vector& v) { return add_signed(1, v); }
  Vector& operator-=(const Vector& v) { return add_signed(-1, v); }
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Scalar& c, const Vector& v) {
    Vector r(v.size());
    return r.add_scaled(c, v);
  }
  Vector operator-() const { return Scalar(-1) * *this; }
  friend bool operator==(const Vector& a, const Vector& b) { return a.coords_ == b.coords_; }

  ScalarDomain domain() const {
    ScalarDomain d = ScalarDomain::rational;
    for (const auto& c : coords_) d = join(d, c.domain());
    return d;
  }

 private:
  void check_size(const Vector& v) const {
    if (v.size() != size()) throw Error(ErrorCode::dimension_mismatch, "vector sizes differ");
  }

  std::vector<Scalar> coords_;
};

/// Common parity of the basis entries carrying nonzero coordinates; nullopt when
/// they are mixed. The zero vector counts as even.
inline std::optional<Parity> parity_of(const Vector& v, const Grading& grading) {
  if (v.size() != grading.size()) throw Error(ErrorCode::dimension_mismatch, "vector does not match basis");
  std::optional<Parity> seen;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!seen) seen = grading[i];
    else if (*seen != grading[i]) return std::nullopt;
  }
  return seen.value_or(Parity::even);
}

/// Even linear self-map of a graded space, stored densely; column j is the
/// image of basis element j. Evenness is enforced at construction.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(Grading grading, std::vector<Scalar> row_major) : grading_(std::move(grading)), m_(std::move(row_major)) {
    const std::size_t n = grading_.size();
    if (m_.size() != n * n) throw Error(ErrorCode::dimension_mismatch, "matrix size does not match grading");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (grading_[i] != grading_[j] && !m_[i * n + j].is_zero())
          throw Error(ErrorCode::evenness_violation,
                      "map sends basis element " + std::to_string(j) + " outside its parity component");
  }

  static LinearMap identity(Grading grading) {
    const std::size_t n = grading.size();
    std::vector<Scalar> m(n * n);
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = Scalar(1);
    return LinearMap(std::move(grading), std::move(m));
  }
  static LinearMap diagonal(Grading grading, std::span<const Scalar> diag) {
    const std::size_t n = grading.size();
    if (diag.size() != n) throw Error(ErrorCode::dimension_mismatch, "diagonal length");
    std::vector<Scalar> m(n * n);
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = diag[i];
    return LinearMap(std::move(grading), std::move(m));
  }
  static LinearMap from_columns(Grading grading, std::span<const Vector> columns) {
    const std::size_t n = grading.size();
    if (columns.size() != n) throw Error(ErrorCode::dimension_mismatch, "column count");
    std::vector<Scalar> m(n * n);
    for (std::size_t j = 0; j < n; ++j) {
      if (columns[j].size() != n) throw Error(ErrorCode::dimension_mismatch, "column length");
      for (std::size_t i = 0; i < n; ++i) m[i * n + j] = columns[j][i];
    }
    return LinearMap(std::move(grading), std::move(m));
  }

  std::size_t dim() const { return grading_.size(); }
  const Grading& grading() const { return grading_; }
  const Scalar& at(std::size_t row, std::size_t col) const { return m_[row * dim() + col]; }

  Vector column(std::size_t j) const {
    Vector v(dim());
    for (std::size_t i = 0; i < dim(); ++i) v[i] = at(i, j);
    return v;
  }

  bool is_identity() const { return *this == identity(grading_); }

  ScalarDomain domain() const {
    ScalarDomain d = ScalarDomain::rational;
    for (const auto& c : m_) d = join(d, c.domain());
    return d;
  }

  friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.grading_ == b.grading_ && a.m_ == b.m_; }

 private:
  Grading grading_;
  std::vector<Scalar> m_;
};

inline void require_same_grading(const Grading& a, const Grading& b, const char* what) {
  if (a.size() != b.size()) throw Error(ErrorCode::dimension_mismatch, std::string(what) + ": dimensions differ");
  if (a != b) throw Error(ErrorCode::dimension_mismatch, std::string(what) + ": gradings differ");
}

inline Vector map_apply(const LinearMap& f, const Vector& v) {
  const std::size_t n = f.dim();
  if (v.size() != n) throw Error(ErrorCode::dimension_mismatch, "map_apply: vector size");
  Vector out(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i)
      if (!f.at(i, j).is_zero()) out[i] += f.at(i, j) * v[j];
  }
  return out;
}

/// f ∘ g, i.e. the matrix product f·g.
inline LinearMap map_compose(const LinearMap& f, const LinearMap& g) {
  require_same_grading(f.grading(), g.grading(), "map_compose");
  const std::size_t n = f.dim();
  std::vector<Scalar> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (f.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!g.at(k, j).is_zero()) m[i * n + j] += f.at(i, k) * g.at(k, j);
    }
  return LinearMap(f.grading(), std::move(m));
}

/// f^k by repeated squaring; f^0 = Id.
inline LinearMap map_power(const LinearMap& f, std::uint64_t k) {
  LinearMap result = LinearMap::identity(f.grading());
  LinearMap base = f;
  while (k > 0) {
    if (k & 1U) result = map_compose(result, base);
    k >>= 1U;
    if (k > 0) base = map_compose(base, base);
  }
  return result;
}

inline bool maps_commute(const LinearMap& f, const LinearMap& g) {
  return map_compose(f, g) == map_compose(g, f);
}

/// Substitutes l = point in every entry.
inline Vector evaluate_at(const Vector& v, const Rational& point) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Scalar(v[i].eval(point));
  return out;
}

inline LinearMap evaluate_at(const LinearMap& f, const Rational& point) {
  const std::size_t n = f.dim();
  std::vector<Scalar> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = Scalar(f.at(i, j).eval(point));
  return LinearMap(f.grading(), std::move(m));
}

}  // namespace hly
