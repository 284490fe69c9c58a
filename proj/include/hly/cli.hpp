#pragma once

// Command-line front end. run() parses arguments, dispatches a subcommand and
// maps its outcome to an exit code:
//   0 pass / success, 1 violations found, 2 input or validation error,
//   3 a construction's hypotheses do not hold.

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hly/axioms.hpp"
#include "hly/catalog.hpp"
#include "hly/constructions.hpp"
#include "hly/document.hpp"
#include "hly/error.hpp"

namespace hly::cli {

enum Exit : int { ok = 0, violations = 1, input_error = 2, precondition = 3 };

/// Resolves "catalog:<name>?k=v&..." or a path to an algebra document.
inline Algebra resolve_algebra(const std::string& ref) {
  if (auto c = parse_catalog_ref(ref)) return instantiate_algebra(c->name, c->params);
  return load(ref);
}

/// Resolves a catalog map, or a document whose alpha section is the map.
inline LinearMap resolve_map(const std::string& ref) {
  if (auto c = parse_catalog_ref(ref)) return instantiate_map(c->name, c->params);
  const json doc = parse_json(read_file(ref));
  if (doc.is_object() && (doc.contains("binary") || doc.contains("ternary"))) return load_document(doc).alpha();
  return load_map_document(doc).second;
}

/// Parses "l=<rational>".
inline Rational parse_point(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.rfind("l=", 0) != 0) throw Error(ErrorCode::validation, "--at expects l=<rational>, got '" + text + "'");
  return parse_rational(s.substr(2));
}

namespace detail {

struct Options {
  std::string format = "text";
  std::string ref;
  std::string profile = "hly";
  std::string at;
  long long max_violations = -1;
  std::string by;
  int n = 1;
  std::string kind = "both";
  std::string out_path;
  std::string construction;
  std::string name;
};

inline std::optional<std::size_t> limit(const Options& o) {
  if (o.max_violations < 0) return std::nullopt;
  return static_cast<std::size_t>(o.max_violations);
}

inline int emit_report(const Report& r, const Options& o, std::ostream& out) {
  if (o.format == "json") out << report_json(r, limit(o)).dump(2) << "\n";
  else out << render_text(r, limit(o));
  return r.passed() ? ok : violations;
}

inline int emit_algebra(const Algebra& alg, const Options& o, std::ostream& out) {
  if (o.out_path.empty()) {
    out << save_text(alg);
    return ok;
  }
  save(alg, o.out_path);
  if (o.format == "json") out << ordered_json{{"algebra", alg.name()}, {"written", o.out_path}}.dump(2) << "\n";
  else out << "wrote " << alg.name() << " to " << o.out_path << "\n";
  return ok;
}

inline int cmd_check(const Options& o, std::ostream& out) {
  auto p = parse_profile(o.profile);
  if (!p) throw Error(ErrorCode::validation, "unknown profile '" + o.profile + "'");
  Algebra alg = resolve_algebra(o.ref);
  if (!o.at.empty()) alg = evaluate_at(alg, parse_point(o.at));
  return emit_report(check_profile(alg, *p), o, out);
}

inline int cmd_twist(const Options& o, std::ostream& out) {
  const Algebra alg = resolve_algebra(o.ref);
  const LinearMap beta = resolve_map(o.by);
  return emit_algebra(yau_twist(alg, beta, o.n), o, out);
}

inline int cmd_derive(const Options& o, std::ostream& out) {
  if (o.n < 0) throw Error(ErrorCode::bad_arity, "--n must be nonnegative");
  const Algebra alg = resolve_algebra(o.ref);
  const auto n = static_cast<unsigned>(o.n);
  if (o.kind == "binary") return emit_algebra(derived2(alg, n), o, out);
  if (o.kind == "ternary") return emit_algebra(derived3(alg, n), o, out);
  return emit_algebra(derived_bt(alg, n), o, out);
}

inline int cmd_construct(const Options& o, std::ostream& out) {
  const Algebra alg = resolve_algebra(o.ref);
  if (o.construction == "supercommutator") return emit_algebra(supercommutator(alg), o, out);
  if (o.construction == "sts") return emit_algebra(sts_from_alg(alg), o, out);
  if (o.construction == "hly-from-homlie") return emit_algebra(hly_from_homlie(alg), o, out);
  return emit_algebra(ly_from_malcev(alg), o, out);
}

inline int cmd_cross_check(const Options& o, std::ostream& out) {
  std::string name = o.name;
  Params params;
  if (auto c = parse_catalog_ref(o.name)) {
    name = c->name;
    params = c->params;
  }
  const CrossCheck cc = cross_check(name, params);
  if (o.format == "json") out << cross_check_json(cc, limit(o)).dump(2) << "\n";
  else out << render_text(cc, limit(o));
  return cc.agree() ? ok : violations;
}

inline int cmd_catalog_list(const Options& o, std::ostream& out) {
  if (o.format == "json") {
    ordered_json list = ordered_json::array();
    for (const auto& e : list_entries()) list.push_back(entry_json(e));
    out << list.dump(2) << "\n";
    return ok;
  }
  for (const auto& e : list_entries()) {
    std::string sig;
    for (const auto& p : e.parameters) sig += (sig.empty() ? "" : ",") + p.name + "=" + p.default_value;
    out << std::left << std::setw(22) << e.name << std::setw(8) << (e.kind == EntryKind::algebra ? "algebra" : "map")
        << std::setw(18) << ("(" + sig + ")") << e.description << "\n";
  }
  return ok;
}

inline int cmd_catalog_show(const Options& o, std::ostream& out) {
  std::string name = o.name;
  Params params;
  if (auto c = parse_catalog_ref(o.name)) {
    name = c->name;
    params = c->params;
  }
  const CatalogEntry& e = find_entry(name);
  const CatalogObject obj = instantiate(name, params);
  if (const auto* alg = std::get_if<Algebra>(&obj)) {
    if (o.format == "json") {
      out << save_text(*alg);
      return ok;
    }
    out << entry_json(e).dump(2) << "\n" << save_text(*alg);
    return ok;
  }
  const auto& f = std::get<LinearMap>(obj);
  const Algebra host = instantiate_algebra(e.basis_of);
  const ordered_json j = map_json(e.name, f, host.basis());
  if (o.format == "json") {
    out << j.dump(2) << "\n";
    return ok;
  }
  out << entry_json(e).dump(2) << "\n";
  const auto names = host.basis().names();
  for (std::size_t c = 0; c < f.dim(); ++c) out << "  " << names[c] << " -> " << render_vector(f.column(c), names) << "\n";
  return ok;
}

inline void report_error(const Error& e, const Options& o, std::ostream& out, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  const auto* pre = dynamic_cast<const PreconditionError*>(&e);
  if (o.format == "json") {
    ordered_json j{{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) j["offset"] = pe->offset();
    if (pre && pre->report()) j["report"] = report_json(*pre->report(), limit(o));
    out << j.dump(2) << "\n";
  } else if (pre && pre->report()) {
    out << render_text(*pre->report(), limit(o));
  }
}

}  // namespace detail

/// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::Options;
  Options o;
  CLI::App app{"Exact checks and constructions for Hom-Lie-Yamaguti superalgebras", "hly"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json"};
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember(formats))->capture_default_str();

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out_path, "write the algebra document here"); };

  auto* check = app.add_subcommand("check", "run a checker profile");
  check->add_option("ref", o.ref, "catalog:<name>[?k=v&...] or document path")->required();
  check->add_option("--profile", o.profile, "checker profile")
      ->check(CLI::IsMember({"hly", "ly", "hom-lie", "lie", "hom-assoc", "sts", "hlts", "nambu", "mult"}))
      ->capture_default_str();
  check->add_option("--at", o.at, "substitute l=<rational> before checking");
  check->add_option("--max-violations", o.max_violations, "truncate the listed violations")
      ->check(CLI::NonNegativeNumber);
  add_format(check);

  auto* twist = app.add_subcommand("twist", "Yau twist by an endomorphism");
  twist->add_option("ref", o.ref, "algebra reference")->required();
  twist->add_option("--by", o.by, "map reference")->required();
  twist->add_option("--n", o.n, "power of the map")->capture_default_str();
  add_out(twist);
  add_format(twist);

  auto* derive = app.add_subcommand("derive", "nth-derived algebra");
  derive->add_option("ref", o.ref, "algebra reference")->required();
  derive->add_option("--n", o.n, "derivation order")->capture_default_str();
  derive->add_option("--kind", o.kind, "which operations")
      ->check(CLI::IsMember({"binary", "ternary", "both"}))
      ->capture_default_str();
  add_out(derive);
  add_format(derive);

  auto* construct = app.add_subcommand("construct", "build a related structure");
  construct->add_option("construction", o.construction, "construction")
      ->required()
      ->check(CLI::IsMember({"supercommutator", "sts", "hly-from-homlie", "ly-from-malcev"}));
  construct->add_option("ref", o.ref, "algebra reference")->required();
  add_out(construct);
  add_format(construct);

  auto* xcheck = app.add_subcommand("cross-check", "compare a printed table with its construction");
  xcheck->add_option("name", o.name, "catalog entry, optionally catalog:<name>?k=v")->required();
  xcheck->add_option("--max-violations", o.max_violations, "truncate the listed violations")
      ->check(CLI::NonNegativeNumber);
  add_format(xcheck);

  auto* catalog = app.add_subcommand("catalog", "built-in algebras and maps");
  catalog->require_subcommand(1);
  add_format(catalog);
  auto* list = catalog->add_subcommand("list", "list entries");
  add_format(list);
  auto* show = catalog->add_subcommand("show", "show one entry");
  show->add_option("name", o.name, "entry name, optionally catalog:<name>?k=v")->required();
  add_format(show);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Exit::ok : Exit::input_error;
  }

  try {
    if (*check) return detail::cmd_check(o, out);
    if (*twist) return detail::cmd_twist(o, out);
    if (*derive) return detail::cmd_derive(o, out);
    if (*construct) return detail::cmd_construct(o, out);
    if (*xcheck) return detail::cmd_cross_check(o, out);
    if (*list) return detail::cmd_catalog_list(o, out);
    if (*show) return detail::cmd_catalog_show(o, out);
  } catch (const Error& e) {
    detail::report_error(e, o, out, err);
    return is_precondition_failure(e.code()) ? Exit::precondition : Exit::input_error;
  }
  return Exit::input_error;
}

}  // namespace hly::cli
