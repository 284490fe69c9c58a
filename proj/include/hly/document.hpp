#pragma once

// JSON algebra documents and report serialization.
//
// Document layout:
//   { "name": ..., "scalars": "rational" | "rational_function",
//     "basis":   [{"name": "H", "parity": 0}, ...],
//     "binary":  [{"args": ["H","X"], "value": [{"basis": "X", "coeff": "2*l^2"}]}, ...],
//     "ternary": [{"args": ["H","X","Y"], "value": [...]}, ...],
//     "alpha":   [{"arg": "X", "value": [...]}, ...],
//     "options": {"auto_skew_complete": true} }
// A present section defines the operation (unlisted products are zero).
// Unlisted alpha columns are those of the identity.

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "hly/catalog.hpp"
#include "hly/error.hpp"
#include "hly/report.hpp"
#include "hly/tensorops.hpp"

namespace hly {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace doc_detail {

[[noreturn]] inline void invalid(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::validation, where + ": " + what);
}

inline const json& member(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) invalid(where, std::string("missing field '") + key + "'");
  return *it;
}

inline std::string string_at(const json& j, const std::string& where) {
  if (!j.is_string()) invalid(where, "expected a string");
  return j.get<std::string>();
}

inline const json& array_at(const json& j, const std::string& where) {
  if (!j.is_array()) invalid(where, "expected an array");
  return j;
}

inline Parity parity_at(const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    const auto v = j.get<long long>();
    if (v == 0) return Parity::even;
    if (v == 1) return Parity::odd;
  } else if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "even" || s == "0") return Parity::even;
    if (s == "odd" || s == "1") return Parity::odd;
  }
  invalid(where, "parity must be 0 or 1");
}

struct Reader {
  const SuperBasis& basis;
  ScalarDomain domain;

  std::size_t index(const json& j, const std::string& where) const {
    const std::string name = string_at(j, where);
    auto i = basis.index_of(name);
    if (!i) invalid(where, "unknown basis element '" + name + "'");
    return *i;
  }

  Scalar coeff(const json& j, const std::string& where) const {
    if (j.is_number_integer()) return Scalar(j.get<long long>());
    const std::string text = string_at(j, where);
    try {
      return parse_scalar(text, domain);
    } catch (const ParseError& e) {
      throw ParseError(e.offset(), where + ": cannot parse coefficient '" + text + "'");
    } catch (const Error& e) {
      if (e.code() == ErrorCode::domain || e.code() == ErrorCode::division_by_zero)
        throw Error(e.code(), where + ": coefficient '" + text + "'");
      throw;
    }
  }

  Vector value(const json& j, const std::string& where) const {
    Vector v(basis.size());
    const json& terms = array_at(j, where);
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string w = where + "[" + std::to_string(t) + "]";
      if (!terms[t].is_object()) invalid(w, "expected {basis, coeff}");
      v[index(member(terms[t], "basis", w), w + ".basis")] += coeff(member(terms[t], "coeff", w), w + ".coeff");
    }
    return v;
  }

  SparseTable table(const json& section, std::size_t arity, const std::string& where) const {
    SparseTable out;
    const json& rows = array_at(section, where);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::string w = where + "[" + std::to_string(r) + "]";
      if (!rows[r].is_object()) invalid(w, "expected {args, value}");
      const json& args = array_at(member(rows[r], "args", w), w + ".args");
      if (args.size() != arity) invalid(w + ".args", "expected " + std::to_string(arity) + " names");
      std::vector<std::size_t> t;
      for (std::size_t a = 0; a < arity; ++a) t.push_back(index(args[a], w + ".args[" + std::to_string(a) + "]"));
      Vector v = value(member(rows[r], "value", w), w + ".value");
      auto [it, fresh] = out.emplace(t, v);
      if (!fresh && !(it->second == v)) throw Error(ErrorCode::conflict, w + ": product listed twice with different values");
    }
    return out;
  }
};

[[noreturn]] inline void check_evenness(const Error& e, const std::string& where) {
  if (e.code() == ErrorCode::evenness_violation) throw Error(ErrorCode::validation, where + ": " + e.what());
  throw;  // called from a handler: rethrows the original object
}

}  // namespace doc_detail

namespace doc_detail {

struct Header {
  std::string name;
  ScalarDomain domain;
  SuperBasis basis;
};

inline Header read_header(const json& doc) {
  if (!doc.is_object()) invalid("document", "expected an object");
  const std::string name = doc.contains("name") ? string_at(doc["name"], "name") : std::string("unnamed");
  ScalarDomain domain = ScalarDomain::rational;
  if (doc.contains("scalars")) {
    auto d = parse_domain(string_at(doc["scalars"], "scalars"));
    if (!d) invalid("scalars", "expected \"rational\" or \"rational_function\"");
    domain = *d;
  }
  const json& basis_j = array_at(member(doc, "basis", "document"), "basis");
  std::vector<BasisEntry> entries;
  for (std::size_t i = 0; i < basis_j.size(); ++i) {
    const std::string w = "basis[" + std::to_string(i) + "]";
    if (!basis_j[i].is_object()) invalid(w, "expected {name, parity}");
    entries.push_back({string_at(member(basis_j[i], "name", w), w + ".name"),
                       parity_at(member(basis_j[i], "parity", w), w + ".parity")});
  }
  return {name, domain, SuperBasis(std::move(entries))};
}

inline std::optional<LinearMap> read_alpha(const json& doc, const Reader& rd) {
  if (!doc.contains("alpha")) return std::nullopt;
  const std::size_t n = rd.basis.size();
  const json& cols = array_at(doc["alpha"], "alpha");
  std::vector<Vector> c;
  for (std::size_t j = 0; j < n; ++j) c.push_back(Vector::unit(n, j));
  std::vector<bool> seen(n, false);
  for (std::size_t r = 0; r < cols.size(); ++r) {
    const std::string w = "alpha[" + std::to_string(r) + "]";
    if (!cols[r].is_object()) invalid(w, "expected {arg, value}");
    const std::size_t j = rd.index(member(cols[r], "arg", w), w + ".arg");
    if (seen[j]) throw Error(ErrorCode::conflict, w + ": column listed twice");
    seen[j] = true;
    c[j] = rd.value(member(cols[r], "value", w), w + ".value");
  }
  try {
    return LinearMap::from_columns(rd.basis.grading(), c);
  } catch (const Error& e) {
    check_evenness(e, "alpha");
  }
}

}  // namespace doc_detail

/// Builds an Algebra from a parsed document.
inline Algebra load_document(const json& doc) {
  using namespace doc_detail;
  const Header h = read_header(doc);
  const SuperBasis& basis = h.basis;

  bool complete = true;
  if (doc.contains("options")) {
    const json& o = doc["options"];
    if (!o.is_object()) invalid("options", "expected an object");
    if (o.contains("auto_skew_complete")) {
      if (!o["auto_skew_complete"].is_boolean()) invalid("options.auto_skew_complete", "expected a boolean");
      complete = o["auto_skew_complete"].get<bool>();
    }
  }

  const Reader rd{basis, h.domain};
  const bool has_b = doc.contains("binary"), has_t = doc.contains("ternary");
  const bool empty_b = !has_b || (doc["binary"].is_array() && doc["binary"].empty());
  const bool empty_t = !has_t || (doc["ternary"].is_array() && doc["ternary"].empty());
  if (empty_b && empty_t) invalid("document", "at least one operation required");

  std::optional<BinaryOp> bin;
  std::optional<TernaryOp> ter;
  try {
    if (has_b) bin = BinaryOp(basis.grading(), densify(basis, 2, rd.table(doc["binary"], 2, "binary"), complete));
  } catch (const Error& e) {
    check_evenness(e, "binary");
  }
  try {
    if (has_t) ter = TernaryOp(basis.grading(), densify(basis, 3, rd.table(doc["ternary"], 3, "ternary"), complete));
  } catch (const Error& e) {
    check_evenness(e, "ternary");
  }
  return Algebra(h.name, basis, std::move(bin), std::move(ter), read_alpha(doc, rd), h.domain);
}

/// A map document: basis plus alpha columns, no operations needed.
inline std::pair<SuperBasis, LinearMap> load_map_document(const json& doc) {
  using namespace doc_detail;
  const Header h = read_header(doc);
  const Reader rd{h.basis, h.domain};
  auto f = read_alpha(doc, rd);
  if (!f) invalid("document", "map document needs an alpha section");
  return {h.basis, *f};
}

inline json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, std::string("malformed JSON: ") + e.what());
  }
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::validation, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Algebra load_text(std::string_view text) { return load_document(parse_json(text)); }

inline Algebra load(const std::filesystem::path& path) { return load_text(read_file(path)); }

namespace doc_detail {

inline ordered_json value_json(const Vector& v, const SuperBasis& basis) {
  ordered_json terms = ordered_json::array();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) terms.push_back({{"basis", basis.name(k)}, {"coeff", v[k].str()}});
  return terms;
}

}  // namespace doc_detail

/// Full-table document; skew completion is switched off so it loads back verbatim.
inline ordered_json to_document(const Algebra& alg) {
  using doc_detail::value_json;
  const SuperBasis& basis = alg.basis();
  const std::size_t n = alg.dim();
  ordered_json doc;
  doc["name"] = alg.name();
  doc["scalars"] = std::string(to_string(alg.domain()));
  ordered_json b = ordered_json::array();
  for (std::size_t i = 0; i < n; ++i) b.push_back({{"name", basis.name(i)}, {"parity", bit(basis.parity(i))}});
  doc["basis"] = b;
  if (const auto& op = alg.binary()) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!op->product(i, j).is_zero())
          rows.push_back({{"args", {basis.name(i), basis.name(j)}}, {"value", value_json(op->product(i, j), basis)}});
    doc["binary"] = rows;
  }
  if (const auto& op = alg.ternary()) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!op->product(i, j, k).is_zero())
            rows.push_back({{"args", {basis.name(i), basis.name(j), basis.name(k)}},
                            {"value", value_json(op->product(i, j, k), basis)}});
    doc["ternary"] = rows;
  }
  if (!alg.alpha().is_identity()) {
    ordered_json cols = ordered_json::array();
    for (std::size_t j = 0; j < n; ++j) cols.push_back({{"arg", basis.name(j)}, {"value", value_json(alg.alpha().column(j), basis)}});
    doc["alpha"] = cols;
  }
  doc["options"] = {{"auto_skew_complete", false}};
  return doc;
}

inline std::string save_text(const Algebra& alg) { return to_document(alg).dump(2) + "\n"; }

inline void save(const Algebra& alg, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::validation, "cannot write '" + path.string() + "'");
  out << save_text(alg);
}

/// An even map in document form: the basis plus its columns.
inline ordered_json map_json(const std::string& name, const LinearMap& f, const SuperBasis& basis) {
  ordered_json j;
  j["name"] = name;
  j["scalars"] = std::string(to_string(f.domain()));
  ordered_json b = ordered_json::array();
  for (std::size_t i = 0; i < basis.size(); ++i) b.push_back({{"name", basis.name(i)}, {"parity", bit(basis.parity(i))}});
  j["basis"] = b;
  ordered_json cols = ordered_json::array();
  for (std::size_t c = 0; c < f.dim(); ++c)
    cols.push_back({{"arg", basis.name(c)}, {"value", doc_detail::value_json(f.column(c), basis)}});
  j["alpha"] = cols;
  return j;
}

// ---------------------------------------------------------------------------
// Reports

/// Human-readable vector, e.g. "((2-2*l^4)/l^2)*H - 2*Y".
inline std::string render_vector(const Vector& v, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    std::string c = v[k].str();
    if (c.find_first_of("+-/", 1) != std::string::npos) c = "(" + c + ")";
    if (!out.empty()) {
      if (c[0] == '-') {
        out += " - ";
        c.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    out += (c == "1" ? "" : c == "-1" ? "-" : c + "*") + names[k];
  }
  return out.empty() ? "0" : out;
}

inline std::string render_tuple(const std::vector<std::size_t>& t, const std::vector<std::string>& names) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + names[t[i]];
  return s + ")";
}

inline ordered_json violation_json(const Violation& v, const std::vector<std::string>& names) {
  ordered_json tuple = ordered_json::array();
  for (auto i : v.tuple) tuple.push_back(names[i]);
  ordered_json residual = ordered_json::array();
  for (std::size_t k = 0; k < v.residual.size(); ++k)
    if (!v.residual[k].is_zero()) residual.push_back({{"basis", names[k]}, {"coeff", v.residual[k].str()}});
  return {{"identity", std::string(to_string(v.identity))}, {"tuple", tuple}, {"residual", residual}};
}

/// {algebra, profile, passed, violations}; max_violations truncates the list only.
inline ordered_json report_json(const Report& r, std::optional<std::size_t> max_violations = std::nullopt) {
  ordered_json j;
  j["algebra"] = r.algebra_name;
  j["profile"] = r.profile;
  j["passed"] = r.passed();
  ordered_json vs = ordered_json::array();
  for (const auto& v : r.violations) {
    if (max_violations && vs.size() >= *max_violations) break;
    vs.push_back(violation_json(v, r.basis_names));
  }
  j["violations"] = vs;
  return j;
}

inline std::string render_text(const Report& r, std::optional<std::size_t> max_violations = std::nullopt) {
  std::ostringstream os;
  os << "algebra: " << r.algebra_name << "\n";
  os << "profile: " << r.profile << "\n";
  os << "checked:";
  for (auto id : r.identities_checked) os << " " << to_string(id);
  os << "\n";
  if (r.passed()) {
    os << "result: PASS\n";
    return os.str();
  }
  os << "result: FAIL (" << r.violations.size() << " violations)\n";
  std::size_t shown = 0;
  for (const auto& v : r.violations) {
    if (max_violations && shown >= *max_violations) {
      os << "... " << (r.violations.size() - shown) << " more\n";
      break;
    }
    os << "  " << to_string(v.identity) << " " << render_tuple(v.tuple, r.basis_names) << ": "
       << render_vector(v.residual, r.basis_names) << "\n";
    ++shown;
  }
  return os.str();
}

inline ordered_json cross_check_json(const CrossCheck& cc, std::optional<std::size_t> max_violations = std::nullopt) {
  ordered_json j;
  j["entry"] = cc.entry;
  j["construction"] = cc.construction;
  j["agree"] = cc.agree();
  j["diff"] = report_json(cc.diff, max_violations);
  ordered_json listed = ordered_json::array();
  for (const auto& e : cc.listed) {
    ordered_json args = ordered_json::array();
    for (auto i : e.args) args.push_back(cc.diff.basis_names[i]);
    ordered_json p = ordered_json::array(), c = ordered_json::array();
    for (std::size_t k = 0; k < e.printed.size(); ++k) {
      if (!e.printed[k].is_zero()) p.push_back({{"basis", cc.diff.basis_names[k]}, {"coeff", e.printed[k].str()}});
      if (!e.constructed[k].is_zero())
        c.push_back({{"basis", cc.diff.basis_names[k]}, {"coeff", e.constructed[k].str()}});
    }
    listed.push_back({{"args", args}, {"printed", p}, {"constructed", c}, {"agree", e.agree()}});
  }
  j["printed_entries"] = listed;
  if (cc.printed_check) j["printed_check"] = report_json(*cc.printed_check, max_violations);
  if (cc.constructed_check) j["constructed_check"] = report_json(*cc.constructed_check, max_violations);
  return j;
}

inline std::string render_text(const CrossCheck& cc, std::optional<std::size_t> max_violations = std::nullopt) {
  std::ostringstream os;
  const auto& names = cc.diff.basis_names;
  os << "entry: " << cc.entry << "\n";
  os << "construction: " << cc.construction << "\n";
  os << "printed entries:\n";
  for (const auto& e : cc.listed) {
    os << "  " << (e.agree() ? "agree   " : "DIFFER  ") << render_tuple(e.args, names) << " printed "
       << render_vector(e.printed, names);
    if (!e.agree()) os << ", constructed " << render_vector(e.constructed, names);
    os << "\n";
  }
  os << "table diff (printed - constructed):\n";
  if (cc.diff.passed()) os << "  none\n";
  for (const auto& v : cc.diff.violations)
    os << "  " << to_string(v.identity) << " " << render_tuple(v.tuple, names) << ": " << render_vector(v.residual, names)
       << "\n";
  if (cc.printed_check) os << "-- printed table --\n" << render_text(*cc.printed_check, max_violations);
  if (cc.constructed_check) os << "-- constructed table --\n" << render_text(*cc.constructed_check, max_violations);
  return os.str();
}

inline ordered_json entry_json(const CatalogEntry& e) {
  ordered_json j;
  j["name"] = e.name;
  j["kind"] = e.kind == EntryKind::algebra ? "algebra" : "map";
  j["description"] = e.description;
  ordered_json ps = ordered_json::array();
  for (const auto& p : e.parameters) ps.push_back({{"name", p.name}, {"default", p.default_value}, {"description", p.description}});
  j["parameters"] = ps;
  if (e.profile) j["profile"] = std::string(to_string(*e.profile));
  if (!e.basis_of.empty()) j["basis_of"] = e.basis_of;
  j["cross_check"] = e.cross_checkable;
  return j;
}

}  // namespace hly
