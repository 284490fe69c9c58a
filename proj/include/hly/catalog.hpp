#pragma once

// Built-in algebras and maps: osp(1,2) and its Hom-deformation, the Hom-LY
// families built from them, sLY(3,1) with its endomorphism families, and
// the matrix superalgebra M(1|1). Printed tables are kept verbatim next to
// the constructed ones so cross_check can diff them.

#include <algorithm>
#include <array>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hly/axioms.hpp"
#include "hly/constructions.hpp"
#include "hly/error.hpp"
#include "hly/field.hpp"
#include "hly/tensorops.hpp"

namespace hly {

// ---------------------------------------------------------------------------
// Sparse tables and skew completion

using SparseTable = std::map<std::vector<std::size_t>, Vector>;

namespace detail {

inline std::string tuple_names(const SuperBasis& basis, const std::vector<std::size_t>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + basis.name(t[i]);
  return s + ")";
}

inline std::size_t dense_index(const std::vector<std::size_t>& t, std::size_t n) {
  std::size_t k = 0;
  for (auto i : t) k = k * n + i;
  return k;
}

}  // namespace detail

/// Expands explicitly listed products into a dense table. With complete set,
/// each listed product also fixes its partner under exchange of the first
/// two arguments, (b,a,...) = -(-1)^{|a||b|} (a,b,...). A listed partner that
/// disagrees is a ConflictError.
inline std::vector<Vector> densify(const SuperBasis& basis, std::size_t arity, const SparseTable& listed,
                                   bool complete) {
  const std::size_t n = basis.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) total *= n;
  std::vector<Vector> dense(total, Vector(n));
  for (const auto& [t, v] : listed) {
    if (t.size() != arity) throw Error(ErrorCode::validation, "table entry has wrong arity");
    for (auto i : t)
      if (i >= n) throw Error(ErrorCode::validation, "table entry refers to a missing basis element");
    if (v.size() != n) throw Error(ErrorCode::dimension_mismatch, "table value length");
    dense[detail::dense_index(t, n)] = v;
  }
  if (!complete) return dense;
  for (const auto& [t, v] : listed) {
    std::vector<std::size_t> s = t;
    std::swap(s[0], s[1]);
    Vector implied = v;
    if (koszul(bit(basis.parity(t[0])) * bit(basis.parity(t[1]))) > 0) implied = -implied;
    auto it = listed.find(s);
    if (it != listed.end()) {
      if (!(it->second == implied))
        throw Error(ErrorCode::conflict, "entries " + detail::tuple_names(basis, t) + " and " +
                                             detail::tuple_names(basis, s) + " violate skew-supersymmetry");
      continue;
    }
    dense[detail::dense_index(s, n)] = implied;
  }
  return dense;
}

inline SparseTable nonzero_entries(const std::vector<Vector>& dense, std::size_t n, std::size_t arity) {
  SparseTable out;
  std::vector<std::size_t> t(arity, 0);
  for (std::size_t k = 0; k < dense.size(); ++k) {
    std::size_t r = k;
    for (std::size_t p = arity; p-- > 0;) {
      t[p] = r % n;
      r /= n;
    }
    if (!dense[k].is_zero()) out.emplace(t, dense[k]);
  }
  return out;
}

/// Skew completion of a full table, treating its nonzero entries as listed.
inline BinaryOp skew_complete(const SuperBasis& basis, const BinaryOp& op) {
  return BinaryOp(basis.grading(), densify(basis, 2, nonzero_entries(op.products(), basis.size(), 2), true));
}
inline TernaryOp skew_complete(const SuperBasis& basis, const TernaryOp& op) {
  return TernaryOp(basis.grading(), densify(basis, 3, nonzero_entries(op.products(), basis.size(), 3), true));
}

/// Collects printed products by basis name, remembering their order.
class TableBuilder {
 public:
  using Terms = std::initializer_list<std::pair<Scalar, std::string_view>>;

  explicit TableBuilder(SuperBasis basis) : basis_(std::move(basis)) {}

  TableBuilder& set(std::initializer_list<std::string_view> args, Terms value) {
    std::vector<std::size_t> t;
    for (auto a : args) t.push_back(index(a));
    Vector v(basis_.size());
    for (const auto& [c, name] : value) v[index(name)] += c;
    auto& table = t.size() == 2 ? binary_ : ternary_;
    if (!table.emplace(t, v).second) throw Error(ErrorCode::conflict, "entry listed twice");
    order_.push_back(t);
    return *this;
  }

  const SuperBasis& basis() const { return basis_; }
  std::optional<BinaryOp> binary(bool complete = true) const {
    if (binary_.empty()) return std::nullopt;
    return BinaryOp(basis_.grading(), densify(basis_, 2, binary_, complete));
  }
  std::optional<TernaryOp> ternary(bool complete = true) const {
    if (ternary_.empty()) return std::nullopt;
    return TernaryOp(basis_.grading(), densify(basis_, 3, ternary_, complete));
  }
  /// Listed products in the order they were given.
  const std::vector<std::vector<std::size_t>>& listed() const { return order_; }

 private:
  std::size_t index(std::string_view name) const {
    auto i = basis_.index_of(std::string(name));
    if (!i) throw Error(ErrorCode::validation, "unknown basis element '" + std::string(name) + "'");
    return *i;
  }

  SuperBasis basis_;
  SparseTable binary_;
  SparseTable ternary_;
  std::vector<std::vector<std::size_t>> order_;
};

// ---------------------------------------------------------------------------
// Entries

enum class EntryKind { algebra, map };

struct ParamSpec {
  std::string name;
  std::string default_value;  // coefficient expression; "l" means symbolic
  std::string description;
};

struct CatalogEntry {
  std::string name;
  EntryKind kind = EntryKind::algebra;
  std::string description;
  std::vector<ParamSpec> parameters;
  std::optional<Profile> profile;  // advertised checker profile (algebras)
  std::string basis_of;            // maps: the algebra whose basis they act on
  bool cross_checkable = false;
};

using Params = std::map<std::string, std::string>;
using CatalogObject = std::variant<Algebra, LinearMap>;

namespace catalog_detail {

inline SuperBasis osp12_basis() {
  return SuperBasis({{"H", Parity::even}, {"X", Parity::even}, {"Y", Parity::even}, {"F", Parity::odd},
                     {"G", Parity::odd}});
}
inline SuperBasis sly31_basis() {
  return SuperBasis({{"e1", Parity::even}, {"e2", Parity::even}, {"e3", Parity::even}, {"e4", Parity::odd}});
}
inline SuperBasis m11_basis() {
  return SuperBasis({{"E11", Parity::even}, {"E22", Parity::even}, {"E12", Parity::odd}, {"E21", Parity::odd}});
}

inline TableBuilder osp12_table() {
  TableBuilder t(osp12_basis());
  t.set({"H", "X"}, {{2, "X"}})
      .set({"H", "Y"}, {{-2, "Y"}})
      .set({"X", "Y"}, {{1, "H"}})
      .set({"Y", "G"}, {{1, "F"}})
      .set({"X", "F"}, {{1, "G"}})
      .set({"H", "F"}, {{-1, "F"}})
      .set({"H", "G"}, {{1, "G"}})
      .set({"G", "F"}, {{1, "H"}})
      .set({"G", "G"}, {{-2, "X"}})
      .set({"F", "F"}, {{2, "Y"}});
  return t;
}

inline TableBuilder osp12_lambda_table(const Scalar& l) {
  const Scalar l2 = l * l;
  TableBuilder t(osp12_basis());
  t.set({"H", "X"}, {{2 * l2, "X"}})
      .set({"H", "Y"}, {{Scalar(-2) / l2, "Y"}})
      .set({"X", "Y"}, {{1, "H"}})
      .set({"Y", "G"}, {{Scalar(1) / l, "F"}})
      .set({"X", "F"}, {{l, "G"}})
      .set({"H", "F"}, {{Scalar(-1) / l, "F"}})
      .set({"H", "G"}, {{l, "G"}})
      .set({"G", "F"}, {{1, "H"}})
      .set({"G", "G"}, {{-2 * l2, "X"}})
      .set({"F", "F"}, {{Scalar(2) / l2, "Y"}});
  return t;
}

inline LinearMap alpha_lambda(const Scalar& l) {
  const Scalar l2 = l * l;
  const std::array<Scalar, 5> d{Scalar(1), l2, Scalar(1) / l2, Scalar(1) / l, l};
  return LinearMap::diagonal(osp12_basis().grading(), d);
}

// Ternary table of sLY(1,2)_l exactly as printed, chain by chain.
inline TableBuilder sly12_printed_table(const Scalar& l) {
  const Scalar l2 = l * l, l4 = l2 * l2;
  const Scalar il2 = Scalar(1) / l2, il4 = Scalar(1) / l4;
  TableBuilder t = osp12_lambda_table(l);
  // 2H
  t.set({"H", "X", "Y"}, {{2, "H"}})
      .set({"H", "Y", "X"}, {{2, "H"}})
      .set({"H", "F", "G"}, {{1, "H"}})
      .set({"H", "G", "F"}, {{1, "H"}})
      .set({"X", "F", "F"}, {{1, "H"}})
      .set({"Y", "G", "G"}, {{-1, "H"}})
      .set({"F", "F", "X"}, {{-2, "H"}});
  // -2 l^4 X
  t.set({"H", "X", "H"}, {{-4 * l4, "X"}})
      .set({"X", "Y", "X"}, {{2 * l4, "X"}})
      .set({"F", "G", "X"}, {{-2 * l4, "X"}})
      .set({"H", "G", "G"}, {{-2 * l4, "X"}})
      .set({"X", "F", "G"}, {{-2 * l4, "X"}});
  // 4/l^4 Y
  t.set({"H", "Y", "H"}, {{4 * il4, "Y"}})
      .set({"Y", "X", "Y"}, {{2 * il4, "Y"}})
      .set({"F", "G", "Y"}, {{2 * il4, "Y"}})
      .set({"H", "F", "F"}, {{-2 * il4, "Y"}})
      .set({"Y", "G", "F"}, {{2 * il4, "Y"}})
      .set({"F", "F", "H"}, {{-4 * il4, "Y"}});
  // -2/l^2 F
  t.set({"H", "F", "H"}, {{-il2, "F"}})
      .set({"H", "Y", "G"}, {{-2 * il2, "F"}})
      .set({"H", "G", "Y"}, {{-il2, "F"}})
      .set({"X", "Y", "F"}, {{-il2, "F"}})
      .set({"F", "F", "G"}, {{2 * il2, "F"}})
      .set({"X", "F", "Y"}, {{-il2, "F"}})
      .set({"Y", "G", "H"}, {{il2, "F"}})
      .set({"F", "G", "F"}, {{il2, "F"}});
  // -l^2 G
  t.set({"H", "G", "H"}, {{-l2, "G"}})
      .set({"H", "X", "F"}, {{2 * l2, "G"}})
      .set({"H", "F", "X"}, {{l2, "G"}})
      .set({"X", "Y", "G"}, {{l2, "G"}})
      .set({"X", "F", "H"}, {{-l2, "G"}})
      .set({"Y", "G", "X"}, {{-l2, "G"}})
      .set({"F", "G", "G"}, {{-l2, "G"}});
  return t;
}

inline TableBuilder sly31_binary_table() {
  TableBuilder t(sly31_basis());
  t.set({"e1", "e3"}, {{-1, "e1"}})
      .set({"e2", "e3"}, {{2, "e2"}})
      .set({"e3", "e4"}, {{-1, "e4"}})
      .set({"e4", "e4"}, {{1, "e1"}, {1, "e2"}});
  return t;
}

inline TableBuilder sly31_printed_table() {
  TableBuilder t = sly31_binary_table();
  t.set({"e1", "e3", "e3"}, {{2, "e1"}})
      .set({"e2", "e3", "e3"}, {{8, "e2"}})
      .set({"e3", "e4", "e3"}, {{2, "e4"}})
      .set({"e3", "e4", "e4"}, {{1, "e1"}, {-2, "e2"}})
      .set({"e4", "e4", "e3"}, {{-1, "e1"}, {-4, "e2"}});
  return t;
}

inline LinearMap alpha1(const Scalar& a, const Scalar& b, const Scalar& c) {
  const SuperBasis basis = sly31_basis();
  const Scalar a2 = a * a;
  std::vector<Vector> cols(4, Vector(4));
  cols[0][0] = a2;
  cols[1][1] = a2;
  cols[2][0] = b;
  cols[2][1] = c;
  cols[2][2] = 1;
  cols[3][3] = a2;
  return LinearMap::from_columns(basis.grading(), cols);
}

inline LinearMap alpha2(const Scalar& b, const Scalar& c, const Scalar& d) {
  const SuperBasis basis = sly31_basis();
  std::vector<Vector> cols(4, Vector(4));
  cols[0][0] = 1;
  cols[1][1] = 1;
  cols[2][0] = b;
  cols[2][1] = c;
  cols[2][2] = Scalar(Rational(1)) / Scalar(2);
  cols[3][3] = d;
  return LinearMap::from_columns(basis.grading(), cols);
}

// Twisted sLY(3,1) table under alpha1 as printed; only a enters.
inline TableBuilder sly31_alpha1_printed_table(const Scalar& a) {
  const Scalar a2 = a * a, a4 = a2 * a2, a5 = a4 * a;
  TableBuilder t(sly31_basis());
  t.set({"e1", "e3"}, {{-a2, "e1"}})
      .set({"e2", "e3"}, {{2 * a2, "e2"}})
      .set({"e3", "e4"}, {{-a, "e4"}})
      .set({"e4", "e4"}, {{a2, "e1"}, {a2, "e2"}});
  t.set({"e1", "e3", "e3"}, {{2 * a4, "e1"}})
      .set({"e2", "e3", "e3"}, {{8 * a4, "e2"}})
      .set({"e3", "e4", "e3"}, {{-2 * a5, "e4"}})
      .set({"e3", "e4", "e4"}, {{a4, "e1"}, {-2 * a4, "e2"}})
      .set({"e4", "e4", "e3"}, {{a4 * (2 * a - 1), "e1"}, {a4 * 2 * (a + 1), "e2"}});
  return t;
}

// 3x3 supermatrices for osp(1,2); rows/columns 1 and 3 even, 2 odd.
using Mat3 = std::array<std::array<Rational, 3>, 3>;

inline std::array<Mat3, 5> osp12_matrices() {
  std::array<Mat3, 5> m{};
  m[0][0][0] = 1;  // H
  m[0][2][2] = -1;
  m[1][0][2] = 1;  // X
  m[2][2][0] = 1;  // Y
  m[3][1][0] = 1;  // F
  m[3][2][1] = 1;
  m[4][0][1] = 1;  // G
  m[4][1][2] = -1;
  return m;
}

inline Mat3 matmul(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Bracket table of osp(1,2) from the matrix supercommutator.
inline BinaryOp osp12_from_matrices() {
  const SuperBasis basis = osp12_basis();
  const auto m = osp12_matrices();
  return BinaryOp::from_function(basis.grading(), [&](std::size_t i, std::size_t j) {
    const Mat3 ab = matmul(m[i], m[j]), ba = matmul(m[j], m[i]);
    const int s = koszul(bit(basis.parity(i)) * bit(basis.parity(j)));
    Mat3 c{};
    for (int r = 0; r < 3; ++r)
      for (int q = 0; q < 3; ++q) c[r][q] = s > 0 ? ab[r][q] - ba[r][q] : ab[r][q] + ba[r][q];
    Vector v(5);
    v[0] = c[0][0];
    v[1] = c[0][2];
    v[2] = c[2][0];
    v[3] = c[1][0];
    v[4] = c[0][1];
    Mat3 back{};
    for (std::size_t k = 0; k < 5; ++k)
      for (int r = 0; r < 3; ++r)
        for (int q = 0; q < 3; ++q) back[r][q] += *v[k].as_rational() * m[k][r][q];
    if (back != c) throw Error(ErrorCode::validation, "supercommutator left the span of the osp(1,2) basis");
    return v;
  });
}

inline BinaryOp m11_product() {
  const SuperBasis basis = m11_basis();
  // E_ij E_kl = delta_jk E_il; basis order E11, E22, E12, E21.
  const std::array<std::pair<int, int>, 4> idx{{{0, 0}, {1, 1}, {0, 1}, {1, 0}}};
  return BinaryOp::from_function(basis.grading(), [&](std::size_t p, std::size_t q) {
    Vector v(4);
    if (idx[p].second == idx[q].first)
      for (std::size_t r = 0; r < 4; ++r)
        if (idx[r].first == idx[p].first && idx[r].second == idx[q].second) v[r] = 1;
    return v;
  });
}

inline const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> list = {
      {"osp12", EntryKind::algebra, "orthosymplectic Lie superalgebra osp(1,2), basis H,X,Y | F,G", {},
       Profile::lie, "", true},
      {"osp12_lambda", EntryKind::algebra, "Hom-Lie superalgebra osp(1,2)_l twisted by alpha_lambda",
       {{"l", "l", "deformation parameter, nonzero"}}, Profile::hom_lie, "", true},
      {"alpha_lambda", EntryKind::map,
       "alpha_lambda: H -> H, X -> l^2 X, Y -> Y/l^2, F -> F/l, G -> l G",
       {{"l", "l", "deformation parameter, nonzero"}}, std::nullopt, "osp12", false},
      {"sly12_lambda", EntryKind::algebra, "Hom-LY superalgebra sLY(1,2)_l: osp12_lambda with {x,y,z} = [[x,y],alpha(z)]",
       {{"l", "l", "deformation parameter, nonzero"}}, Profile::hly, "", true},
      {"sly12_lambda_printed", EntryKind::algebra, "sLY(1,2)_l with the ternary table as printed",
       {{"l", "l", "deformation parameter, nonzero"}}, Profile::hly, "", true},
      {"sly31", EntryKind::algebra,
       "Lie-Yamaguti superalgebra sLY(3,1): printed bracket, ternary from the Malcev construction", {}, Profile::ly,
       "", true},
      {"sly31_printed", EntryKind::algebra, "sLY(3,1) with the ternary table as printed", {}, Profile::ly, "", true},
      {"sly31_alpha1", EntryKind::algebra,
       "sLY(3,1) twisted by alpha1(a,b,c): bracket alpha1 o [,], ternary alpha1^2 o {,,}, twist alpha1",
       {{"a", "l", "scales e1, e2 by a^2 and e4 by a^2"}, {"b", "0", "e1 component of alpha1(e3)"}, {"c", "0", "e2 component of alpha1(e3)"}},
       Profile::hly, "", true},
      {"sly31_alpha1_printed", EntryKind::algebra, "twisted sLY(3,1) table as printed, twist alpha1(a,b,c)",
       {{"a", "l", ""}, {"b", "0", ""}, {"c", "0", ""}}, Profile::hly, "", true},
      {"alpha1", EntryKind::map, "alpha1: e1 -> a^2 e1, e2 -> a^2 e2, e3 -> b e1 + c e2 + e3, e4 -> a^2 e4",
       {{"a", "1", ""}, {"b", "0", ""}, {"c", "0", ""}}, std::nullopt, "sly31", false},
      {"alpha2", EntryKind::map, "alpha2: e1 -> e1, e2 -> e2, e3 -> b e1 + c e2 + e3/2, e4 -> d e4",
       {{"b", "0", ""}, {"c", "0", ""}, {"d", "1", ""}}, std::nullopt, "sly31", false},
      {"m11_assoc", EntryKind::algebra, "matrix superalgebra M(1|1), basis E11,E22 | E12,E21, alpha = Id", {},
       Profile::hom_assoc, "", false},
  };
  return list;
}

inline std::map<std::string, Scalar> resolve(const CatalogEntry& e, const Params& given) {
  for (const auto& [k, v] : given) {
    bool known = std::any_of(e.parameters.begin(), e.parameters.end(), [&](const ParamSpec& p) { return p.name == k; });
    if (!known) throw Error(ErrorCode::validation, "entry '" + e.name + "' has no parameter '" + k + "'");
  }
  std::map<std::string, Scalar> out;
  for (const auto& p : e.parameters) {
    auto it = given.find(p.name);
    out[p.name] = parse_scalar(it == given.end() ? p.default_value : it->second, ScalarDomain::rational_function);
  }
  return out;
}

inline std::string display_name(const CatalogEntry& e, const Params& given) {
  std::string s = e.name;
  char sep = '?';
  for (const auto& [k, v] : given) {
    s += sep + k + "=" + v;
    sep = '&';
  }
  return s;
}

inline Scalar nonzero_lambda(const std::map<std::string, Scalar>& p) {
  const Scalar& l = p.at("l");
  if (l.is_zero()) throw Error(ErrorCode::constraint_violation, "l must be nonzero");
  return l;
}

}  // namespace catalog_detail

inline const std::vector<CatalogEntry>& list_entries() { return catalog_detail::entries(); }

inline const CatalogEntry& find_entry(std::string_view name) {
  for (const auto& e : list_entries())
    if (e.name == name) return e;
  throw Error(ErrorCode::unknown_entry, "no catalog entry '" + std::string(name) + "'");
}

inline CatalogObject instantiate(std::string_view name, const Params& params = {}) {
  using namespace catalog_detail;
  const CatalogEntry& e = find_entry(name);
  const auto p = resolve(e, params);
  const std::string label = display_name(e, params);
  auto build = [&](const TableBuilder& t, std::optional<LinearMap> alpha) {
    return Algebra(label, t.basis(), t.binary(), t.ternary(), std::move(alpha));
  };

  if (e.name == "osp12") return build(osp12_table(), std::nullopt);
  if (e.name == "osp12_lambda") {
    const Scalar l = nonzero_lambda(p);
    return build(osp12_lambda_table(l), alpha_lambda(l));
  }
  if (e.name == "alpha_lambda") return alpha_lambda(nonzero_lambda(p));
  if (e.name == "sly12_lambda") {
    const Scalar l = nonzero_lambda(p);
    return hly_from_homlie(build(osp12_lambda_table(l), alpha_lambda(l))).with_name(label);
  }
  if (e.name == "sly12_lambda_printed") {
    const Scalar l = nonzero_lambda(p);
    return build(sly12_printed_table(l), alpha_lambda(l));
  }
  if (e.name == "sly31") return ly_from_malcev(build(sly31_binary_table(), std::nullopt)).with_name(label);
  if (e.name == "sly31_printed") return build(sly31_printed_table(), std::nullopt);
  if (e.name == "sly31_alpha1") {
    const LinearMap a1 = alpha1(p.at("a"), p.at("b"), p.at("c"));
    const Algebra base = ly_from_malcev(build(sly31_binary_table(), std::nullopt));
    return Algebra(label, base.basis(), outer2(a1, *base.binary()), outer3(map_compose(a1, a1), *base.ternary()), a1);
  }
  if (e.name == "sly31_alpha1_printed")
    return build(sly31_alpha1_printed_table(p.at("a")), alpha1(p.at("a"), p.at("b"), p.at("c")));
  if (e.name == "alpha1") return alpha1(p.at("a"), p.at("b"), p.at("c"));
  if (e.name == "alpha2") return alpha2(p.at("b"), p.at("c"), p.at("d"));
  if (e.name == "m11_assoc") return Algebra(label, m11_basis(), m11_product(), std::nullopt);
  throw Error(ErrorCode::unknown_entry, "no builder for '" + e.name + "'");
}

inline Algebra instantiate_algebra(std::string_view name, const Params& params = {}) {
  CatalogObject o = instantiate(name, params);
  if (auto* a = std::get_if<Algebra>(&o)) return std::move(*a);
  throw Error(ErrorCode::validation, "catalog entry '" + std::string(name) + "' is a map, not an algebra");
}

inline LinearMap instantiate_map(std::string_view name, const Params& params = {}) {
  CatalogObject o = instantiate(name, params);
  if (auto* m = std::get_if<LinearMap>(&o)) return std::move(*m);
  throw Error(ErrorCode::validation, "catalog entry '" + std::string(name) + "' is an algebra, not a map");
}

// ---------------------------------------------------------------------------
// References of the form catalog:<name>?a=1&b=2

struct CatalogRef {
  std::string name;
  Params params;
};

inline std::optional<CatalogRef> parse_catalog_ref(std::string_view ref) {
  constexpr std::string_view prefix = "catalog:";
  if (ref.substr(0, prefix.size()) != prefix) return std::nullopt;
  ref.remove_prefix(prefix.size());
  CatalogRef out;
  const auto q = ref.find('?');
  out.name = std::string(ref.substr(0, q));
  if (out.name.empty()) throw Error(ErrorCode::validation, "empty catalog reference");
  if (q == std::string_view::npos) return out;
  std::string_view rest = ref.substr(q + 1);
  while (!rest.empty()) {
    const auto amp = rest.find('&');
    std::string_view kv = rest.substr(0, amp);
    const auto eq = kv.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw Error(ErrorCode::validation, "malformed catalog parameter '" + std::string(kv) + "'");
    if (!out.params.emplace(std::string(kv.substr(0, eq)), std::string(kv.substr(eq + 1))).second)
      throw Error(ErrorCode::validation, "catalog parameter given twice");
    if (amp == std::string_view::npos) break;
    rest.remove_prefix(amp + 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cross-checks of printed tables against independent constructions

struct EntryComparison {
  IdentityId table;  // TABLE2 or TABLE3
  std::vector<std::size_t> args;
  Vector printed;
  Vector constructed;
  bool agree() const { return printed == constructed; }
};

struct CrossCheck {
  std::string entry;
  std::string construction;              // the independent path
  Report diff;                           // printed minus constructed, every tuple
  std::vector<EntryComparison> listed;   // each printed product, in printed order
  std::optional<Report> printed_check;   // advertised profile on the printed table
  std::optional<Report> constructed_check;

  bool agree() const { return diff.passed(); }
};

namespace catalog_detail {

inline CrossCheck compare(const std::string& entry, const std::string& construction, const TableBuilder& printed_table,
                          const Algebra& printed, const Algebra& constructed) {
  CrossCheck cc;
  cc.entry = entry;
  cc.construction = construction;
  cc.diff.algebra_name = printed.name();
  cc.diff.profile = "cross-check";
  cc.diff.basis_names = printed.basis().names();
  const std::size_t n = printed.dim();
  if (printed.binary() || constructed.binary()) {
    const BinaryOp pz = printed.binary().value_or(BinaryOp::zero(printed.grading()));
    const BinaryOp cz = constructed.binary().value_or(BinaryOp::zero(printed.grading()));
    cc.diff.identities_checked.push_back(IdentityId::TABLE2);
    for (auto& [t, r] : sweep(n, 2, [&](const std::vector<std::size_t>& t) {
           return pz.product(t[0], t[1]) - cz.product(t[0], t[1]);
         }))
      cc.diff.violations.push_back({IdentityId::TABLE2, std::move(t), std::move(r)});
    for (const auto& t : printed_table.listed())
      if (t.size() == 2) cc.listed.push_back({IdentityId::TABLE2, t, pz.product(t[0], t[1]), cz.product(t[0], t[1])});
  }
  if (printed.ternary() || constructed.ternary()) {
    const TernaryOp pz = printed.ternary().value_or(TernaryOp::zero(printed.grading()));
    const TernaryOp cz = constructed.ternary().value_or(TernaryOp::zero(printed.grading()));
    cc.diff.identities_checked.push_back(IdentityId::TABLE3);
    for (auto& [t, r] : sweep(n, 3, [&](const std::vector<std::size_t>& t) {
           return pz.product(t[0], t[1], t[2]) - cz.product(t[0], t[1], t[2]);
         }))
      cc.diff.violations.push_back({IdentityId::TABLE3, std::move(t), std::move(r)});
    for (const auto& t : printed_table.listed())
      if (t.size() == 3)
        cc.listed.push_back({IdentityId::TABLE3, t, pz.product(t[0], t[1], t[2]), cz.product(t[0], t[1], t[2])});
  }
  return cc;
}

}  // namespace catalog_detail

/// Diffs a printed table against its independent construction and runs the
/// advertised profile on both.
inline CrossCheck cross_check(std::string_view name, const Params& params = {}) {
  using namespace catalog_detail;
  const CatalogEntry& e = find_entry(name);
  if (!e.cross_checkable)
    throw PreconditionError(ErrorCode::no_construction_path,
                            "catalog entry '" + e.name + "' has no independent construction to compare against",
                            nullptr);
  const auto p = resolve(e, params);
  const std::string label = display_name(e, params);
  CrossCheck cc;

  if (e.name == "osp12") {
    const TableBuilder t = osp12_table();
    Algebra printed(label, t.basis(), t.binary(), std::nullopt);
    Algebra built(label, t.basis(), osp12_from_matrices(), std::nullopt);
    cc = compare(e.name, "matrix supercommutator", t, printed, built);
    cc.printed_check = check_profile(printed, Profile::lie);
    cc.constructed_check = check_profile(built, Profile::lie);
    return cc;
  }
  if (e.name == "osp12_lambda") {
    const Scalar l = nonzero_lambda(p);
    const TableBuilder t = osp12_lambda_table(l);
    Algebra printed(label, t.basis(), t.binary(), std::nullopt, alpha_lambda(l));
    const TableBuilder base = osp12_table();
    Algebra built =
        yau_twist(Algebra("osp12", base.basis(), base.binary(), std::nullopt), alpha_lambda(l), 1).with_name(label);
    cc = compare(e.name, "yau_twist(osp12, alpha_lambda, 1)", t, printed, built);
    cc.printed_check = check_profile(printed, Profile::hom_lie);
    cc.constructed_check = check_profile(built, Profile::hom_lie);
    return cc;
  }
  if (e.name == "sly12_lambda" || e.name == "sly12_lambda_printed") {
    const Scalar l = nonzero_lambda(p);
    const TableBuilder t = sly12_printed_table(l);
    Algebra printed(label, t.basis(), t.binary(), t.ternary(), alpha_lambda(l));
    const TableBuilder base = osp12_lambda_table(l);
    Algebra built =
        hly_from_homlie(Algebra(label, base.basis(), base.binary(), std::nullopt, alpha_lambda(l))).with_name(label);
    cc = compare(e.name, "hly_from_homlie(osp12_lambda)", t, printed, built);
    cc.printed_check = check_profile(printed, Profile::hly);
    cc.constructed_check = check_profile(built, Profile::hly);
    return cc;
  }
  if (e.name == "sly31" || e.name == "sly31_printed") {
    const TableBuilder t = sly31_printed_table();
    Algebra printed(label, t.basis(), t.binary(), t.ternary());
    const TableBuilder base = sly31_binary_table();
    Algebra built = ly_from_malcev(Algebra(label, base.basis(), base.binary(), std::nullopt)).with_name(label);
    cc = compare(e.name, "ly_from_malcev(printed bracket)", t, printed, built);
    cc.printed_check = check_profile(printed, Profile::ly);
    cc.constructed_check = check_profile(built, Profile::ly);
    return cc;
  }
  if (e.name == "sly31_alpha1" || e.name == "sly31_alpha1_printed") {
    const TableBuilder t = sly31_alpha1_printed_table(p.at("a"));
    const LinearMap a1 = alpha1(p.at("a"), p.at("b"), p.at("c"));
    Algebra printed(label, t.basis(), t.binary(), t.ternary(), a1);
    Algebra built = instantiate_algebra("sly31_alpha1", params).with_name(label);
    cc = compare(e.name, "alpha1 o [,] and alpha1^2 o {,,} on sly31", t, printed, built);
    cc.printed_check = check_profile(printed, Profile::hly);
    cc.constructed_check = check_profile(built, Profile::hly);
    return cc;
  }
  throw PreconditionError(ErrorCode::no_construction_path, "no construction path for '" + e.name + "'", nullptr);
}

}  // namespace hly
